"""Multipliers as pairs of action rules, and the exact multiplier algebra in finite dimension."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .algebra import AlgebraSpec, check_nondegenerate, mul_basis_left, mul_basis_right
from .element import Element, add_into
from .errors import DegenerateProduct, NotFiniteDimensional, SchemeMismatch
from .linalg import Echelon, nullspace
from .schemes import check_depth
from .verdict import Verdict, fails, verified


class LeftMultiplier:
    """A left action x ↦ m·x given on basis labels and extended linearly."""

    def __init__(self, alg: AlgebraSpec, rule: Callable[..., Element], name: str = "λ"):
        self.alg = alg
        self.rule = rule
        self.name = name
        self._cache = {}

    def on_basis(self, idx) -> Element:
        out = self._cache.get(idx)
        if out is None:
            out = self.rule(idx)
            self._cache[idx] = out
        return out

    def __call__(self, x: Element) -> Element:
        acc = {}
        for idx, c in x._c.items():
            add_into(acc, self.on_basis(idx)._c, c)
        return Element.wrap(acc)

    def render(self):
        return self.name


class RightMultiplier(LeftMultiplier):
    """A right action x ↦ x·m; same mechanics, the side is a matter of use."""

    def __init__(self, alg, rule, name="ρ"):
        super().__init__(alg, rule, name)


class Multiplier:
    """The pair (λ, ρ) with b·λ(a) = ρ(b)·a."""

    def __init__(self, alg: AlgebraSpec, left: Callable, right: Callable, name: str = "m"):
        self.alg = alg
        self.left = left if isinstance(left, LeftMultiplier) else LeftMultiplier(alg, left, f"λ[{name}]")
        self.right = right if isinstance(right, LeftMultiplier) else RightMultiplier(alg, right, f"ρ[{name}]")
        self.name = name

    def lmul(self, x: Element) -> Element:
        """m · x"""
        return self.left(x)

    def rmul(self, x: Element) -> Element:
        """x · m"""
        return self.right(x)

    def scale(self, s) -> "Multiplier":
        return Multiplier(self.alg, lambda i: self.left.on_basis(i).scale(s),
                          lambda i: self.right.on_basis(i).scale(s), f"{s}·{self.name}")

    def __add__(self, other: "Multiplier") -> "Multiplier":
        _same(self, other)
        return Multiplier(self.alg, lambda i: self.left.on_basis(i) + other.left.on_basis(i),
                          lambda i: self.right.on_basis(i) + other.right.on_basis(i),
                          f"({self.name}+{other.name})")

    def __mul__(self, other: "Multiplier") -> "Multiplier":
        return compose(self, other)

    def render(self):
        return self.name

    def __repr__(self):
        return f"Multiplier({self.name})"


def _same(m1, m2):
    if m1.alg is not m2.alg and m1.alg.scheme != m2.alg.scheme:
        raise SchemeMismatch(f"multipliers over {m1.alg.name} and {m2.alg.name}")


def embed(a: Element, alg: AlgebraSpec, name: Optional[str] = None) -> Multiplier:
    for idx in a:
        if not alg.scheme.contains(idx):
            raise SchemeMismatch(f"{idx!r} is not a label of {alg.name}")
    return Multiplier(alg, lambda i: mul_basis_right(alg, a, i), lambda i: mul_basis_left(alg, i, a),
                      name or a.render())


def identity(alg: AlgebraSpec) -> Multiplier:
    return Multiplier(alg, Element.basis, Element.basis, "1")


def zero_multiplier(alg: AlgebraSpec) -> Multiplier:
    return Multiplier(alg, lambda i: Element.zero(), lambda i: Element.zero(), "0")


def compose(m1: Multiplier, m2: Multiplier) -> Multiplier:
    """Product m1·m2 = (λ1∘λ2, ρ2∘ρ1)."""
    _same(m1, m2)
    return Multiplier(m1.alg, lambda i: m1.left(m2.left.on_basis(i)),
                      lambda i: m2.right(m1.right.on_basis(i)), f"{m1.name}·{m2.name}")


def verify_multiplier(m: Multiplier, depth: int, labels: Optional[list] = None) -> Verdict:
    """Compatibility b·λ(a) = ρ(b)·a and the module laws on enumerated pairs."""
    check_depth(depth)
    alg = m.alg
    exact = alg.finite and labels is None
    if labels is None:
        labels = alg.basis() if alg.finite else alg.enumerate(depth)
    for a in labels:
        la = m.left.on_basis(a)
        for b in labels:
            rb = m.right.on_basis(b)
            if mul_basis_left(alg, b, la) != mul_basis_right(alg, rb, a):
                return fails((a, b), depth, "b·λ(a) differs from ρ(b)·a")
            if m.left(alg.product(a, b)) != mul_basis_right(alg, la, b):
                return fails((a, b), depth, "λ(ab) differs from λ(a)b")
            if m.right(alg.product(a, b)) != mul_basis_left(alg, a, rb):
                return fails((a, b), depth, "ρ(ab) differs from aρ(b)")
    return verified(depth, exact=exact)


def multipliers_equal(m1: Multiplier, m2: Multiplier, labels) -> Optional[tuple]:
    """First basis label where the actions differ, or None."""
    for i in labels:
        if m1.left.on_basis(i) != m2.left.on_basis(i):
            return ("left", i)
        if m1.right.on_basis(i) != m2.right.on_basis(i):
            return ("right", i)
    return None


# -- finite dimension -------------------------------------------------------------------------

@dataclass
class FiniteMultiplierAlgebra:
    """M(A) for finite-dimensional A: a basis of multipliers given by matrices.

    ``left_matrices[k][i]`` is λ_k(e_i) and ``right_matrices[k][i]`` is ρ_k(e_i),
    both as Elements of A.
    """

    alg: AlgebraSpec
    left_matrices: list
    right_matrices: list
    multipliers: list
    structure_constants: list
    identity_coords: dict

    @property
    def dimension(self) -> int:
        return len(self.multipliers)

    def coordinates(self, m: Multiplier) -> Optional[dict]:
        """Coordinates of a multiplier in the computed basis (None if not in the span)."""
        return _coords(self.alg, self._echelon(), m)

    def _echelon(self):
        ech = getattr(self, "_ech", None)
        if ech is None:
            ech = Echelon(track=True)
            for k, m in enumerate(self.multipliers):
                ech.add(_flatten(self.alg, m), k)
            self._ech = ech
        return ech

    def embedded_span_equal(self) -> bool:
        """embed(A) spans the same space as the computed basis."""
        ech = Echelon(track=False)
        for i in self.alg.basis():
            ech.add(_flatten(self.alg, embed(Element.basis(i), self.alg)))
        if ech.rank != self.dimension:
            return False
        return all(ech.contains(_flatten(self.alg, m)) for m in self.multipliers)

    def check_ideal(self) -> Verdict:
        alg = self.alg
        ech = Echelon(track=False)
        for i in alg.basis():
            ech.add(_flatten(alg, embed(Element.basis(i), alg)))
        for k, m in enumerate(self.multipliers):
            for i in alg.basis():
                e = embed(Element.basis(i), alg)
                for prod in (compose(e, m), compose(m, e)):
                    if not ech.contains(_flatten(alg, prod)):
                        return fails((k, i), None, "product with embedded basis element leaves embed(A)")
        return verified(None, exact=True)

    def check_density(self) -> Verdict:
        """m = 0 iff embed(a)·m = 0 for all a iff m·embed(b) = 0 for all b, on the span."""
        alg = self.alg
        n = self.dimension
        for side in ("left", "right"):
            rows = []
            for k, m in enumerate(self.multipliers):
                vec = {}
                for i in alg.basis():
                    e = embed(Element.basis(i), alg)
                    prod = compose(e, m) if side == "left" else compose(m, e)
                    for key, c in _flatten(alg, prod).items():
                        vec[(i, key)] = c
                rows.append(vec)
            from .linalg import kernel
            ker = kernel(rows)
            if ker:
                return fails((side, ker[0]), None, "nonzero multiplier annihilating A")
        return verified(None, exact=True) if n else verified(None, exact=True)

    def to_spec_json(self) -> dict:
        from .scalar import format_scalar
        return {"dimension": self.dimension,
                "structure_constants": [[i, j, k, format_scalar(s)]
                                        for i, j, k, s in self.structure_constants]}

    def as_algebra(self) -> AlgebraSpec:
        from .algebra import finite_algebra
        return finite_algebra(f"M({self.alg.name})", self.dimension, self.structure_constants)


def _flatten(alg, m: Multiplier) -> dict:
    vec = {}
    for i in alg.basis():
        for k, c in m.left.on_basis(i).items():
            vec[("L", i, k)] = c
        for k, c in m.right.on_basis(i).items():
            vec[("R", i, k)] = c
    return vec


def _coords(alg, ech, m):
    return ech.express(_flatten(alg, m))


def finite_multiplier_algebra(alg: AlgebraSpec) -> FiniteMultiplierAlgebra:
    """Solve b·λ(a) = ρ(b)·a for matrix pairs (λ, ρ) exactly."""
    if not alg.finite:
        raise NotFiniteDimensional(f"{alg.name} has a countable basis")
    gate = check_nondegenerate(alg, max(alg.dimension, 1))
    if not gate.ok:
        raise DegenerateProduct(f"{alg.name} is degenerate: {gate.witness_text()}", gate.witness)
    basis = alg.basis()
    unknowns = [("L", i, j) for i in basis for j in basis] + [("R", i, j) for i in basis for j in basis]
    equations = []
    for a in basis:
        for b in basis:
            eq = {}
            # b·λ(a) = Σ_j L[a,j] e_b e_j ;  ρ(b)·a = Σ_j R[b,j] e_j e_a
            for j in basis:
                for k, c in alg.product(b, j).items():
                    key = (k, ("L", a, j))
                    eq[key] = eq.get(key, 0) + c
                for k, c in alg.product(j, a).items():
                    key = (k, ("R", b, j))
                    eq[key] = eq.get(key, 0) - c
            by_k = {}
            for (k, u), c in eq.items():
                if c:
                    by_k.setdefault(k, {})[u] = c
            equations.extend(by_k.values())
    solutions = nullspace(equations, unknowns)
    lefts, rights, mults = [], [], []
    for n, sol in enumerate(solutions):
        lm = {i: Element({j: sol.get(("L", i, j), 0) for j in basis}) for i in basis}
        rm = {i: Element({j: sol.get(("R", i, j), 0) for j in basis}) for i in basis}
        lefts.append(lm)
        rights.append(rm)
        mults.append(Multiplier(alg, lm.__getitem__, rm.__getitem__, f"m{n}"))
    ech = Echelon(track=True)
    for k, m in enumerate(mults):
        ech.add(_flatten(alg, m), k)
    constants = []
    for x, mx in enumerate(mults):
        for y, my in enumerate(mults):
            coords = ech.express(_flatten(alg, compose(mx, my)))
            if coords is None:
                raise ArithmeticError("multiplier algebra not closed under composition")
            for k, c in sorted(coords.items()):
                if c:
                    constants.append((x, y, k, c))
    ident = ech.express(_flatten(alg, identity(alg)))
    return FiniteMultiplierAlgebra(alg, lefts, rights, mults, constants, ident or {})
