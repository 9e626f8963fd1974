"""Function algebras K(G) of groups and of the monoid (N, +)."""
from __future__ import annotations

import itertools
from functools import lru_cache

from ..algebra import AlgebraSpec, Functional
from ..coproduct.core import (Coproduct, Infinite, LegExpansion, LegFamily, Line,
                              TensorValuedCoproduct, finite_legs)
from ..element import Element
from ..errors import PreconditionNotMet
from ..schemes import GroupWords, Naturals


# -- group handles ---------------------------------------------------------------------

class IntegerGroup:
    """(Z, +); word length is the absolute value."""

    name = "Z"
    order = None

    def contains(self, x):
        return type(x) is int

    def mul(self, x, y):
        return x + y

    def inv(self, x):
        return -x

    unit = 0

    def length(self, x):
        return abs(x)

    def sphere(self, k):
        return [0] if k == 0 else [k, -k]

    def max_length(self):
        return None

    def position(self, x):
        return 2 * x - 1 if x > 0 else -2 * x


class SymmetricGroup:
    """S_n as permutation tuples; all elements sit in shell 0."""

    def __init__(self, n: int = 3):
        self.n = n
        self.name = f"S{n}"
        self.elements = sorted(itertools.permutations(range(n)))
        self.order = len(self.elements)
        self.unit = tuple(range(n))
        self._pos = {g: i for i, g in enumerate(self.elements)}

    def contains(self, x):
        return x in self._pos if isinstance(x, tuple) else False

    def mul(self, x, y):
        # (xy)(i) = x(y(i))
        return tuple(x[y[i]] for i in range(self.n))

    def inv(self, x):
        out = [0] * self.n
        for i, xi in enumerate(x):
            out[xi] = i
        return tuple(out)

    def length(self, x):
        return 0

    def sphere(self, k):
        return list(self.elements) if k == 0 else []

    def max_length(self):
        return 0

    def position(self, x):
        return self._pos[x]


_LETTERS = (1, -1, 2, -2)


class FreeGroup:
    """Free group on generators 1, 2; reduced words are tuples of ±1, ±2.

    Words are enumerated by length, then lexicographically in the letter order
    1, -1, 2, -2.
    """

    name = "F2"
    order = None
    unit = ()

    def contains(self, x):
        if type(x) is not tuple:
            return False
        if any(c not in _LETTERS for c in x):
            return False
        return all(x[i] != -x[i + 1] for i in range(len(x) - 1))

    def mul(self, x, y):
        out = list(x)
        for c in y:
            if out and out[-1] == -c:
                out.pop()
            else:
                out.append(c)
        return tuple(out)

    def inv(self, x):
        return tuple(-c for c in reversed(x))

    def length(self, x):
        return len(x)

    def sphere(self, k):
        return _free_sphere(k)

    def max_length(self):
        return None

    def position(self, x):
        k = len(x)
        before = sum(len(_free_sphere(j)) for j in range(k))
        return before + _free_index(k)[x]


@lru_cache(maxsize=None)
def _free_sphere(k):
    if k == 0:
        return [()]
    out = []
    for w in _free_sphere(k - 1):
        for c in _LETTERS:
            if not w or w[-1] != -c:
                out.append(w + (c,))
    return out


@lru_cache(maxsize=None)
def _free_index(k):
    return {w: i for i, w in enumerate(_free_sphere(k))}


GROUPS = {"Z": IntegerGroup, "S3": SymmetricGroup, "F2": FreeGroup}


# -- K(G) ---------------------------------------------------------------------------------

def function_algebra(group) -> AlgebraSpec:
    """Finitely supported functions on the group with pointwise product; basis δ_p."""
    scheme = GroupWords(group)

    def product(i, j):
        return Element.basis(i) if i == j else Element.zero()

    def local_unit(n):
        labels = scheme.up_to_shell(n - 1) if group.order is None else scheme.enumerate(group.order)
        return Element({p: 1 for p in labels})

    unit = None
    if group.order is not None:
        unit = Element({p: 1 for p in scheme.enumerate(group.order)})
    alg = AlgebraSpec(f"K({group.name})", scheme, product, group.order, local_unit=local_unit,
                      unit=unit, involution=Element.basis)
    alg.group = group
    return alg


class GroupCoproduct(Coproduct):
    """Δ(δ_p) = Σ_{xy=p} δ_x⊗δ_y, i.e. Δ(f)(x, y) = f(xy)."""

    def __init__(self, group):
        self.group = group
        super().__init__(function_algebra(group), f"Δ[K({group.name})]")
        self.counit = Functional.coordinate(group.unit, "ε")

    def delta_left(self, p, u, v):
        if self.group.mul(u, v) == p:
            return Element.basis((u, v))
        return Element.zero()

    delta_right = delta_left

    def t1(self, p, r):
        g = self.group
        return Element.basis((g.mul(p, g.inv(r)), r))

    def t2(self, c, p):
        g = self.group
        return Element.basis((c, g.mul(g.inv(c), p)))

    t3 = t1
    t4 = t2

    def product_support(self, first, second):
        g = self.group
        return list(dict.fromkeys(g.mul(x, y) for x in first for y in second))

    def value(self, p) -> Element:
        """Δ(δ_p) as an element of A⊗A; only for finite groups."""
        if self.group.order is None:
            raise PreconditionNotMet(f"Δ(δ_{p}) is not finitely supported in K({self.group.name})")
        g = self.group
        return Element({(x, g.mul(g.inv(x), p)): 1 for x in self.alg.basis()})

    def legs(self, side, p):
        g = self.group
        if g.order is not None:
            return finite_legs(side, self.value(p))
        scheme = self.alg.scheme

        def term(n):
            x = scheme.at(n)
            return Element.basis(x), Element.basis(g.mul(g.inv(x), p))

        if side == "left":
            line = Line(("point",), scheme.position, "δ_x ↦ position of x", single=True)
        else:
            # δ_y appears as second leg at the position of x = p·y⁻¹
            line = Line(("fiber", p), lambda y: scheme.position(g.mul(p, g.inv(y))),
                        f"δ_y ↦ position of {p}·y⁻¹", single=True)
        fam = LegFamily(term, (line,), f"Σ_x δ_x⊗δ_(x⁻¹·{p})")
        return LegExpansion(side, (), (fam,))

    def delta_witness(self, p) -> Infinite:
        """Δ(δ_p) ∉ A⊗A for infinite groups: the family δ_x⊗δ_(x⁻¹p)."""
        g = self.group
        scheme = self.alg.scheme

        def probe(n):
            x = scheme.at(n)
            lab = (x, g.mul(g.inv(x), p))
            return Element.basis(lab), lab

        return Infinite(f"Σ_x δ_x⊗δ_(x⁻¹·{p}), x ∈ {g.name}", probe, "x")


def group_coproduct(name_or_group) -> GroupCoproduct:
    group = GROUPS[name_or_group]() if isinstance(name_or_group, str) else name_or_group
    return GroupCoproduct(group)


# -- (N, +) -----------------------------------------------------------------------------------

def monoid_algebra() -> AlgebraSpec:
    scheme = Naturals(0)
    return AlgebraSpec("K(N)", scheme,
                       lambda i, j: Element.basis(i) if i == j else Element.zero(),
                       local_unit=lambda n: Element({p: 1 for p in range(n)}),
                       involution=Element.basis)


def monoid_coproduct() -> TensorValuedCoproduct:
    """Δ(δ_p) = Σ_{x+y=p} δ_x⊗δ_y: every fiber is finite."""
    alg = monoid_algebra()
    cp = TensorValuedCoproduct(alg, lambda p: Element({(x, p - x): 1 for x in range(p + 1)}),
                               "Δ[K(N,+)]")
    cp.counit = Functional.coordinate(0, "ε")
    return cp
