"""Coassociativity in its sandwiched forms, the homomorphism property and *-compatibility."""
from __future__ import annotations

from ..element import Element, add_term
from ..schemes import check_depth
from ..verdict import Verdict, fails, precondition, unknown, verified
from .canonical import DISPUTED, map_status
from .core import Coproduct, Infinite


class _NotFinite(Exception):
    def __init__(self, which, x, y):
        self.which, self.x, self.y = which, x, y


class _Oracles:
    """Memoized T maps that refuse Infinite values met outside the swept labels."""

    def __init__(self, cp: Coproduct):
        self.cp = cp
        self.cache = {}

    def __call__(self, which, x, y) -> Element:
        key = (which, x, y)
        v = self.cache.get(key)
        if v is None:
            v = self.cp.oracle(which)(x, y)
            self.cache[key] = v
        if isinstance(v, Infinite):
            raise _NotFinite(which, x, y)
        return v


def _labels(cp, depth):
    alg = cp.alg
    if alg.finite:
        return alg.basis(), True
    return alg.enumerate(depth), False


def _gate(cp, depth, maps):
    bad = [w for w in maps if not map_status(cp, w, depth).regular]
    if bad:
        names = ", ".join(f"T{w}" for w in bad)
        return precondition(f"{names} not regular", depth)
    return None


def _outside(depth, err: _NotFinite) -> Verdict:
    return unknown(f"T{err.which} is infinite at a tensor produced inside the check", depth,
                   (err.x, err.y))


def check_coassoc_pair(cp: Coproduct, inner: int, outer: int, depth: int) -> Verdict:
    """Σ T_outer(c⊗x)⊗y over T_inner(a⊗b) = Σ u⊗T_inner(v⊗b) over T_outer(c⊗a).

    inner ∈ {1, 3} acts on (a, b); outer ∈ {2, 4} acts on (c, a).  The pairs
    (1,2), (3,4), (1,4) and (3,2) give the four sandwiched identities.
    """
    check_depth(depth)
    gate = _gate(cp, depth, (inner, outer))
    if gate:
        return gate
    T = _Oracles(cp)
    labels, exact = _labels(cp, depth)
    try:
        for a in labels:
            for b in labels:
                X = T(inner, a, b)
                for c in labels:
                    lhs = {}
                    for (x, y), k in X.items():
                        for (u, v), m in T(outer, c, x).items():
                            add_term(lhs, (u, v, y), k * m)
                    rhs = {}
                    for (u, v), k in T(outer, c, a).items():
                        for (p, q), m in T(inner, v, b).items():
                            add_term(rhs, (u, p, q), k * m)
                    if lhs != rhs:
                        return fails((a, b, c), depth,
                                     f"sandwiched (Δ⊗ι)Δ and (ι⊗Δ)Δ differ via T{inner}, T{outer}",
                                     lhs=Element.wrap(lhs), rhs=Element.wrap(rhs))
    except _NotFinite as err:
        return _outside(depth, err)
    detail = DISPUTED.get(f"T{min(inner, outer)}T{max(inner, outer)}", "")
    return verified(depth, detail, exact=exact)


def check_coassoc_T1T2(cp, depth):
    return check_coassoc_pair(cp, 1, 2, depth)


def check_coassoc_T3T4(cp, depth):
    return check_coassoc_pair(cp, 3, 4, depth)


def check_coassoc_mixed(cp, variant: str, depth: int) -> Verdict:
    if variant == "T1T4":
        return check_coassoc_pair(cp, 1, 4, depth)
    if variant == "T2T3":
        return check_coassoc_pair(cp, 3, 2, depth)
    raise ValueError(f"unknown mixed variant {variant!r}")


def check_homomorphism(cp: Coproduct, depth: int) -> Verdict:
    """Δ(a)Δ(b) = Δ(ab) on both actions against basis tensors of A⊗A."""
    check_depth(depth)
    cache = cp.__dict__.setdefault("_hom", {})
    if depth in cache:
        return cache[depth]
    labels, exact = _labels(cp, depth)
    probes = [(u, v) for u in labels for v in labels]
    result = None
    for a in labels:
        da = cp.delta(a)
        for b in labels:
            db = cp.delta(b)
            dab = cp.delta_of(cp.alg.product(a, b))
            for z in probes:
                ez = Element.basis(z)
                if da.lmul(db.left.on_basis(z)) != dab.left.on_basis(z):
                    result = fails((a, b), depth, f"Δ(a)Δ(b) and Δ(ab) differ on {ez.render()} (left)",
                                   probe=z)
                    break
                if db.rmul(da.right.on_basis(z)) != dab.right.on_basis(z):
                    result = fails((a, b), depth, f"Δ(a)Δ(b) and Δ(ab) differ on {ez.render()} (right)",
                                   probe=z)
                    break
            if result:
                break
        if result:
            break
    if result is None:
        result = verified(depth, exact=exact)
    cache[depth] = result
    return result


def check_coassoc_single_T1(cp: Coproduct, depth: int) -> Verdict:
    """Coassociativity with T1 regular and Δ a homomorphism, on triples (a, p, q).

    Left side: Σ x⊗T1(y⊗q) over T1(a⊗p) = Σ x⊗y.  Right side: Σ_i Σ T1(u⊗b_i)⊗v
    over T1(a⊗c_i) = Σ u⊗v, where T1(p⊗q) = Σ_i b_i⊗c_i.
    """
    check_depth(depth)
    gate = _gate(cp, depth, (1,))
    if gate:
        return gate
    hom = check_homomorphism(cp, depth)
    if not hom.ok:
        return precondition(f"Δ is not a homomorphism: {hom.witness_text()}", depth)
    T = _Oracles(cp)
    labels, exact = _labels(cp, depth)
    try:
        for a in labels:
            for p in labels:
                X = T(1, a, p)
                for q in labels:
                    lhs = {}
                    for (x, y), k in X.items():
                        for (u, v), m in T(1, y, q).items():
                            add_term(lhs, (x, u, v), k * m)
                    rhs = {}
                    for (b, c), k in T(1, p, q).items():
                        for (u, v), m in T(1, a, c).items():
                            for (s, w), n in T(1, u, b).items():
                                add_term(rhs, (s, w, v), k * m * n)
                    if lhs != rhs:
                        return fails((a, p, q), depth, "the two sides of the T1 identity differ",
                                     lhs=Element.wrap(lhs), rhs=Element.wrap(rhs))
    except _NotFinite as err:
        return _outside(depth, err)
    return verified(depth, exact=exact)


def check_involution(cp: Coproduct, depth: int) -> Verdict:
    """Δ(a*) = Δ(a)* on actions, where m*·z = (z*·m)*."""
    check_depth(depth)
    alg = cp.alg
    sq = cp.square
    if alg.involution is None or sq.involution is None:
        return precondition("the algebra has no involution", depth)
    labels, exact = _labels(cp, depth)
    probes = [(u, v) for u in labels for v in labels]
    for a in labels:
        d_star = cp.delta_of(alg.star(Element.basis(a)))
        da = cp.delta(a)
        for z in probes:
            ez = Element.basis(z)
            lhs = d_star.lmul(ez)
            rhs = sq.star(da.rmul(sq.star(ez)))
            if lhs != rhs:
                return fails((a, z), depth, "Δ(a*) and Δ(a)* differ on a basis tensor",
                             lhs=lhs, rhs=rhs)
    return verified(depth, exact=exact)


def run_all(cp: Coproduct, depth: int) -> dict:
    return {
        "T1T2": check_coassoc_T1T2(cp, depth),
        "T3T4": check_coassoc_T3T4(cp, depth),
        "T1T4": check_coassoc_mixed(cp, "T1T4", depth),
        "T2T3": check_coassoc_mixed(cp, "T2T3", depth),
        "single_T1": check_coassoc_single_T1(cp, depth),
    }
