"""Counits, fullness, (weak) non-degeneracy, the extension to M(A) and extended coassociativity."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..algebra import Functional
from ..element import Element, add_into, add_term, slice_first, slice_second
from ..errors import SpanSolveFailed
from ..linalg import RHS, Echelon, solve
from ..multiplier import Multiplier, identity
from ..schemes import check_depth
from ..verdict import Verdict, conjunction, fails, precondition, render, unknown, verified
from .canonical import map_status
from .coassoc import check_homomorphism
from .core import Coproduct, Infinite, OuterLeg


def _grid(cp: Coproduct, depth: int):
    """(targets, pool, exact): labels to certify and labels allowed as witnesses."""
    alg = cp.alg
    if alg.finite:
        b = alg.basis()
        return b, b, True
    return alg.enumerate(depth), alg.pool(depth), False


# -- counit ----------------------------------------------------------------------------------

# For each map: which leg ε is applied to and the product it must return.
COUNIT_LAWS = {
    1: ("first", lambda alg, x, y: alg.product(x, y), "(ε⊗ι)T1(a⊗c) = ac"),
    2: ("second", lambda alg, x, y: alg.product(x, y), "(ι⊗ε)T2(c⊗a) = ca"),
    3: ("first", lambda alg, x, y: alg.product(y, x), "(ε⊗ι)T3(a⊗b) = ba"),
    4: ("second", lambda alg, x, y: alg.product(y, x), "(ι⊗ε)T4(c⊗a) = ac"),
}

COUNIT_VARIANTS = {"T1T2": (1, 2), "T3T4": (3, 4), "T1": (1,), "T2": (2,), "T3": (3,), "T4": (4,)}


def _variant(variant):
    if variant not in COUNIT_VARIANTS:
        raise ValueError(f"unknown counit variant {variant!r}")
    return COUNIT_VARIANTS[variant]


def check_counit_homomorphism(cp: Coproduct, eps: Functional, depth: int) -> Verdict:
    """ε(ab) = ε(a)ε(b) on pairs of truncated labels."""
    targets, _, exact = _grid(cp, depth)
    alg = cp.alg
    for a in targets:
        for b in targets:
            lhs = eps(alg.product(a, b))
            rhs = eps.at(a) * eps.at(b)
            if lhs != rhs:
                return fails((a, b), depth, f"ε(ab) = {lhs} but ε(a)ε(b) = {rhs}")
    return verified(depth, exact=exact)


def check_counit(cp: Coproduct, eps: Functional, variant: str, depth: int) -> Verdict:
    """The counit laws of ``variant`` on truncated pairs; evidence records whether ε is multiplicative."""
    check_depth(depth)
    maps = _variant(variant)
    bad = [w for w in maps if not map_status(cp, w, depth).regular]
    if bad:
        return precondition(", ".join(f"T{w}" for w in bad) + " not regular", depth)
    targets, _, exact = _grid(cp, depth)
    hom = check_counit_homomorphism(cp, eps, depth)
    evidence = {"variant": variant, "homomorphism": hom.status.value}
    if hom.witness is not None:
        evidence["homomorphism_witness"] = hom.witness
    alg = cp.alg
    for w in maps:
        leg, product, text = COUNIT_LAWS[w]
        T = cp.oracle(w)
        for x in targets:
            for y in targets:
                value = T(x, y)
                got = slice_first(value, eps) if leg == "first" else slice_second(value, eps)
                want = product(alg, x, y)
                if got != want:
                    return fails((x, y), depth, f"{text} fails: got {got.render()}, want {want.render()}",
                                 **evidence)
    return verified(depth, exact=exact, **evidence)


@dataclass
class NoSolution:
    """The counit laws are inconsistent; ``certificate`` lists the clashing constraints."""
    variant: str
    depth: int
    certificate: list
    exact: bool

    def to_json(self):
        from ..verdict import jsonable
        return {"solution": None, "variant": self.variant, "depth": self.depth,
                "certificate": jsonable(self.certificate), "exact": self.exact}


class SolvedCounit(Functional):
    """A counit found by linear solve; values are fixed only on the labels the laws touch."""

    def __init__(self, values: dict, variant: str, depth: int, free: list, exact: bool):
        vals = {k: v for k, v in values.items() if v}
        super().__init__(lambda k: vals.get(k, 0), list(vals), "ε")
        self.values = values
        self.variant = variant
        self.depth = depth
        self.free = free
        self.exact = exact

    @property
    def free_dimension(self) -> int:
        return len(self.free)

    def to_json(self):
        from ..verdict import jsonable
        return {"solution": jsonable(sorted(self.values.items(), key=lambda kv: repr(kv[0]))),
                "variant": self.variant, "depth": self.depth,
                "free_dimension": self.free_dimension, "exact": self.exact}


def solve_counit(cp: Coproduct, variant: str, depth: int):
    """Solve the counit laws for ε's basis values; SolvedCounit or NoSolution."""
    check_depth(depth)
    maps = _variant(variant)
    bad = [w for w in maps if not map_status(cp, w, depth).regular]
    if bad:
        return NoSolution(variant, depth, [f"T{w} not regular" for w in bad], False)
    targets, _, exact = _grid(cp, depth)
    alg = cp.alg
    equations, meaning = [], []
    for w in maps:
        leg, product, text = COUNIT_LAWS[w]
        T = cp.oracle(w)
        for x in targets:
            for y in targets:
                value = T(x, y)
                want = product(alg, x, y)
                rows = {}
                for (u, v), c in value.items():
                    key, out = (u, v) if leg == "first" else (v, u)
                    add_term(rows.setdefault(out, {}), key, c)
                for out in set(rows) | set(want):
                    eq = dict(rows.get(out, {}))
                    if want.coeff(out):
                        eq[RHS] = want.coeff(out)
                    if eq:
                        equations.append(eq)
                        meaning.append((w, x, y, out))
    sol, free, cert = solve(equations)
    if sol is None:
        return NoSolution(variant, depth, [meaning[p] for p in sorted(cert)], exact)
    return SolvedCounit(sol, variant, depth, free, exact)


# -- fullness --------------------------------------------------------------------------------

@dataclass
class FullnessReport:
    left: Verdict
    right: Verdict
    sources: dict = field(default_factory=dict)

    @property
    def full(self) -> Verdict:
        return conjunction([self.left, self.right], self.left.depth)

    def to_json(self):
        return {"status": self.full.status.value, "depth": self.left.depth,
                "witness": self.full.to_json()["witness"],
                "left_leg": dict(self.left.to_json(), source=self.sources.get("left")),
                "right_leg": dict(self.right.to_json(), source=self.sources.get("right"))}


def _leg_vectors_from_map(cp, which, keep, pool):
    """Slices of T_which values by coordinate functionals on the other leg."""
    T = cp.oracle(which)
    for x in pool:
        for y in pool:
            value = T(x, y)
            if isinstance(value, Infinite):
                raise ValueError("map is not regular on the pool")
            rows = {}
            for (u, v), c in value.items():
                k, other = (u, v) if keep == 0 else (v, u)
                add_term(rows.setdefault(other, {}), k, c)
            yield from rows.values()


def _leg_span(cp, keep, depth, pool):
    """Echelon of leg vectors and a description of where they came from (or a Verdict)."""
    maps = (1, 3) if keep == 0 else (2, 4)
    for w in maps:
        if map_status(cp, w, depth).regular:
            try:
                ech = Echelon(track=False)
                for vec in _leg_vectors_from_map(cp, w, keep, pool):
                    ech.add(vec)
                return ech, f"T{w}"
            except ValueError:
                continue
    # non-regular: read the legs of Δ(a) directly.  When the paired legs are
    # independent, a functional dual to them isolates each kept leg.
    side = "right" if keep == 0 else "left"
    window = max(8, len(pool))
    ech = Echelon(track=False)
    for a in pool:
        exp = cp.legs(side, a)
        pairs = list(exp.terms)
        for fam in exp.families:
            pairs.extend(fam.term(n) for n in range(window))
        paired = Echelon(track=False)
        for term in pairs:
            kept, other = (term[0], term[1]) if keep == 0 else (term[1], term[0])
            if isinstance(kept, OuterLeg) or isinstance(other, OuterLeg):
                leg = kept if isinstance(kept, OuterLeg) else other
                return unknown(f"Δ({render(a)}) has the leg {leg.render()} outside A", depth, a), "legs"
            if paired.add(dict(other._c)) is not None:
                return unknown(f"the legs of Δ({render(a)}) paired with functionals are dependent",
                               depth, a), "legs"
            ech.add(dict(kept._c))
    return ech, "legs"


def check_fullness(cp: Coproduct, depth: int) -> FullnessReport:
    """Do the first legs and the second legs of Δ each span A (on the truncation)?"""
    check_depth(depth)
    targets, pool, exact = _grid(cp, depth)
    verdicts, sources = {}, {}
    for keep, name in ((0, "left"), (1, "right")):
        span, source = _leg_span(cp, keep, depth, pool)
        sources[name] = source
        if isinstance(span, Verdict):
            verdicts[name] = span
            continue
        missing = next((k for k in targets if not span.contains({k: 1})), None)
        if missing is None:
            verdicts[name] = verified(depth, exact=exact, rank=span.rank)
        else:
            verdicts[name] = fails(Element.basis(missing), depth,
                                   f"{name} legs do not span this basis element", rank=span.rank)
    return FullnessReport(verdicts["left"], verdicts["right"], sources)


# -- non-degeneracy --------------------------------------------------------------------------

class DeltaSpan:
    """Span of Δ(c)(a⊗b) (side 'left') or (a⊗b)Δ(c) (side 'right') on a truncation.

    c runs over the pool, a and b over the targets; coefficients of each
    generator are tracked so that elements can be expressed in the span.
    """

    def __init__(self, cp: Coproduct, side: str, depth: int):
        self.cp, self.side, self.depth = cp, side, depth
        targets, pool, self.exact = _grid(cp, depth)
        self.ech = Echelon(track=True)
        self.generators = 0
        for c in pool:
            m = cp.delta(c)
            act = m.left.on_basis if side == "left" else m.right.on_basis
            for a in targets:
                for b in targets:
                    vec = act((a, b))
                    if vec:
                        self.ech.add(dict(vec._c), (c, (a, b)))
                        self.generators += 1

    def contains(self, x: Element) -> bool:
        return self.ech.contains(dict(x._c))

    def express(self, x: Element) -> Optional[dict]:
        """{(c, (a, b)): coefficient} with x = Σ coefficient·Δ(c)(a⊗b), or None."""
        return self.ech.express(dict(x._c))


def _spans(cp, depth):
    cache = cp.__dict__.setdefault("_spans", {})
    if depth not in cache:
        cache[depth] = {s: DeltaSpan(cp, s, depth) for s in ("left", "right")}
    return cache[depth]


def _hom_gate(cp, depth) -> Optional[Verdict]:
    hom = check_homomorphism(cp, depth)
    if not hom.ok:
        return precondition(f"Δ is not a homomorphism: {hom.witness_text()}", depth)
    return None


def check_nondegenerate_coproduct(cp: Coproduct, depth: int) -> Verdict:
    """Δ(A)(A⊗A) and (A⊗A)Δ(A) contain every truncated basis tensor."""
    check_depth(depth)
    gate = _hom_gate(cp, depth)
    if gate:
        return gate
    targets, _, exact = _grid(cp, depth)
    spans = _spans(cp, depth)
    for side in ("left", "right"):
        for u in targets:
            for v in targets:
                if not spans[side].contains(Element.basis((u, v))):
                    text = "Δ(A)(A⊗A)" if side == "left" else "(A⊗A)Δ(A)"
                    return fails(Element.basis((u, v)), depth, f"not in {text}")
    return verified(depth, exact=exact)


def _basis_probes(cp, depth):
    targets, _, _ = _grid(cp, depth)
    return [(u, v) for u in targets for v in targets]


def check_idempotent_multiplier(E: Multiplier, probes, depth, exact) -> Verdict:
    for z in probes:
        once = E.left.on_basis(z)
        if E.lmul(once) != once:
            return fails(z, depth, "E·E ≠ E on the left action")
        once = E.right.on_basis(z)
        if E.rmul(once) != once:
            return fails(z, depth, "E·E ≠ E on the right action")
    return verified(depth, exact=exact)


def check_weak_nondegeneracy(cp: Coproduct, E: Multiplier, depth: int) -> Verdict:
    """E idempotent, EΔ(a) = Δ(a) = Δ(a)E, Δ(A)(A⊗A) = E(A⊗A) and the mirror, on the truncation."""
    check_depth(depth)
    gate = _hom_gate(cp, depth)
    if gate:
        return gate
    targets, pool, exact = _grid(cp, depth)
    probes = _basis_probes(cp, depth)
    idem = check_idempotent_multiplier(E, probes, depth, exact)
    if not idem.ok:
        return idem
    for a in targets:
        d = cp.delta(a)
        for z in probes:
            dz = d.left.on_basis(z)
            if E.lmul(dz) != dz:
                return fails((a, z), depth, "EΔ(a) ≠ Δ(a) on the left action")
            if d.lmul(E.left.on_basis(z)) != dz:
                return fails((a, z), depth, "Δ(a)E ≠ Δ(a) on the left action")
            zd = d.right.on_basis(z)
            if E.rmul(zd) != zd:
                return fails((a, z), depth, "Δ(a)E ≠ Δ(a) on the right action")
            if d.rmul(E.right.on_basis(z)) != zd:
                return fails((a, z), depth, "EΔ(a) ≠ Δ(a) on the right action")
    spans = _spans(cp, depth)
    for side in ("left", "right"):
        act = E.left.on_basis if side == "left" else E.right.on_basis
        ez = Echelon(track=False)
        for u in pool:
            for v in targets:
                for z in ((u, v), (v, u)):
                    vec = act(z)
                    if vec:
                        ez.add(dict(vec._c))
        for z in probes:
            image = act(z)
            if not spans[side].contains(image):
                return fails(z, depth, f"E applied on the {side} is outside the span of Δ")
        for c in targets:
            m = cp.delta(c)
            dact = m.left.on_basis if side == "left" else m.right.on_basis
            for z in probes:
                vec = dact(z)
                if vec and not ez.contains(dict(vec._c)):
                    return fails((c, z), depth, f"Δ applied on the {side} is outside the span of E")
    return verified(depth, exact=exact)


# -- extension to the multiplier algebra -----------------------------------------------------

def extend_to_M(cp: Coproduct, m: Multiplier, E: Optional[Multiplier] = None,
                depth: int = 6) -> Multiplier:
    """Δ₁(m) on A⊗A: Δ₁(m)Δ(c)(a⊗b) = Δ(mc)(a⊗b) and (a⊗b)Δ(c)Δ₁(m) = (a⊗b)Δ(cm).

    A queried basis tensor z is first replaced by Ez (resp. zE) when E is given,
    then expressed in the truncated span; SpanSolveFailed reports a truncation
    too small to express it.
    """
    spans = _spans(cp, depth)

    def combine(side, z):
        x = Element.basis(z)
        if E is not None:
            x = E.lmul(x) if side == "left" else E.rmul(x)
        coeffs = spans[side].express(x)
        if coeffs is None:
            raise SpanSolveFailed(f"{x.render()} is outside the truncated span of Δ at depth {depth}")
        acc = {}
        for (c, ab), k in coeffs.items():
            mc = m.lmul(Element.basis(c)) if side == "left" else m.rmul(Element.basis(c))
            d = cp.delta_of(mc)
            out = d.left.on_basis(ab) if side == "left" else d.right.on_basis(ab)
            add_into(acc, out._c, k)
        return Element.wrap(acc)

    return Multiplier(cp.square, lambda z: combine("left", z), lambda z: combine("right", z),
                      f"Δ₁({m.name})")


def check_extension_unit(cp: Coproduct, depth: int, E: Optional[Multiplier] = None) -> Verdict:
    """Δ₁(1) equals 1⊗1 (or E) on all truncated basis actions."""
    targets, _, exact = _grid(cp, depth)
    one = extend_to_M(cp, identity(cp.alg), E, depth)
    expected = E if E is not None else identity(cp.square)
    for z in _basis_probes(cp, depth):
        try:
            if one.left.on_basis(z) != expected.left.on_basis(z):
                return fails(z, depth, "Δ₁(1) differs on the left action")
            if one.right.on_basis(z) != expected.right.on_basis(z):
                return fails(z, depth, "Δ₁(1) differs on the right action")
        except SpanSolveFailed as err:
            return unknown(str(err), depth, z)
    return verified(depth, exact=exact)


def _extension_gate(cp, depth):
    gate = _hom_gate(cp, depth)
    if gate:
        return gate, None
    nd = check_nondegenerate_coproduct(cp, depth)
    if nd.ok:
        return None, None
    E = cp.idempotent
    if E is not None and check_weak_nondegeneracy(cp, E, depth).ok:
        return None, E
    return precondition(f"Δ is neither non-degenerate nor weakly non-degenerate: {nd.witness_text()}",
                        depth), None


def check_coassoc_extension(cp: Coproduct, depth: int) -> Verdict:
    """(Δ⊗ι)Δ(a) = (ι⊗Δ)Δ(a) as multipliers of A⊗A⊗A, compared on basis simple tensors.

    ((Δ⊗ι)m)(Δ(c)(z)⊗w) = Σ β Δ(p)(z)⊗q where m(c⊗w) = Σ β p⊗q, and
    ((ι⊗Δ)m)(w⊗Δ(c)(z)) = Σ β p⊗Δ(q)(z) where m(w⊗c) = Σ β p⊗q; right
    actions mirror this.
    """
    check_depth(depth)
    gate, E = _extension_gate(cp, depth)
    if gate:
        return gate
    targets, _, exact = _grid(cp, depth)
    spans = _spans(cp, depth)
    cache = {}

    def expr(side, y):
        key = (side, y)
        if key not in cache:
            x = Element.basis(y)
            if E is not None:
                x = E.lmul(x) if side == "left" else E.rmul(x)
            coeffs = spans[side].express(x)
            if coeffs is None:
                raise SpanSolveFailed(f"{x.render()} is outside the truncated span of Δ")
            cache[key] = coeffs
        return cache[key]

    def outer_first(a, side, y, w):
        """(Δ⊗ι)Δ(a) acting on e_y⊗e_w (y a pair label)."""
        m = cp.delta(a)
        acc = {}
        for (c, z), k in expr(side, y).items():
            inner = m.left.on_basis((c, w)) if side == "left" else m.right.on_basis((c, w))
            for (p, q), beta in inner.items():
                d = cp.delta(p)
                out = d.left.on_basis(z) if side == "left" else d.right.on_basis(z)
                for (s, t), g in out.items():
                    add_term(acc, (s, t, q), k * beta * g)
        return acc

    def outer_second(a, side, w, y):
        """(ι⊗Δ)Δ(a) acting on e_w⊗e_y."""
        m = cp.delta(a)
        acc = {}
        for (c, z), k in expr(side, y).items():
            inner = m.left.on_basis((w, c)) if side == "left" else m.right.on_basis((w, c))
            for (p, q), beta in inner.items():
                d = cp.delta(q)
                out = d.left.on_basis(z) if side == "left" else d.right.on_basis(z)
                for (s, t), g in out.items():
                    add_term(acc, (p, s, t), k * beta * g)
        return acc

    try:
        for a in targets:
            for u in targets:
                for v in targets:
                    for w in targets:
                        for side in ("left", "right"):
                            lhs = outer_first(a, side, (u, v), w)
                            rhs = outer_second(a, side, u, (v, w))
                            if lhs != rhs:
                                return fails((a, (u, v, w)), depth,
                                             f"(Δ⊗ι)Δ and (ι⊗Δ)Δ differ on the {side} action",
                                             lhs=Element.wrap(lhs), rhs=Element.wrap(rhs))
    except SpanSolveFailed as err:
        return unknown(str(err), depth)
    return verified(depth, exact=exact, idempotent="E" if E is not None else "1⊗1")


# -- surjectivity of canonical maps ----------------------------------------------------------

def check_surjective(cp: Coproduct, which: int, depth: int) -> Verdict:
    """Range of T_which on the pool contains every truncated basis tensor (rank test)."""
    check_depth(depth)
    if not map_status(cp, which, depth).regular:
        return precondition(f"T{which} not regular", depth)
    targets, pool, exact = _grid(cp, depth)
    T = cp.oracle(which)
    ech = Echelon(track=False)
    for x in pool:
        for y in pool:
            v = T(x, y)
            if isinstance(v, Infinite):
                return unknown(f"T{which} infinite on the pool", depth, (x, y))
            if v:
                ech.add(dict(v._c))
    for u in targets:
        for w in targets:
            if not ech.contains({(u, w): 1}):
                return fails(Element.basis((u, w)), depth, f"not in the range of T{which}", rank=ech.rank)
    return verified(depth, exact=exact, rank=ech.rank)
