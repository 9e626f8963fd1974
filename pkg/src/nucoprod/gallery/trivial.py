"""Δ(a) = a⊗1 and the split coproduct Δ(b⊗c) = b⊗1⊗1⊗c."""
from __future__ import annotations

from ..algebra import AlgebraSpec, finite_algebra
from ..coproduct.core import (Coproduct, Infinite, LegExpansion, OuterLeg,
                              TensorValuedCoproduct)
from ..element import Element, pair
from .groups import monoid_algebra
from .sandwich import SandwichCoproduct, UnitE


class RightUnitCoproduct(Coproduct):
    """Δ(a) = a⊗1 on a non-unital algebra with local units."""

    def __init__(self, alg: AlgebraSpec):
        super().__init__(alg, f"Δ[a⊗1 on {alg.name}]")

    def delta_left(self, a, u, v):
        return _pair_with(self.alg.product(a, u), v)

    def delta_right(self, a, u, v):
        return _pair_with(self.alg.product(u, a), v)

    def t1(self, a, b):
        return Element.basis((a, b))

    t3 = t1

    def _times_one(self, x: Element):
        if not x:
            return Element.zero()
        alg = self.alg
        lab, _ = x.canonical()[0]

        def probe(n):
            k = alg.scheme.at(n)
            unit = alg.local_unit_for(list(x))
            return pair(unit, Element.basis(k)), (lab, k)

        return Infinite(f"{x.render()}⊗1", probe, "k")

    def t2(self, c, a):
        return self._times_one(self.alg.product(c, a))

    def t4(self, c, a):
        return self._times_one(self.alg.product(a, c))

    def legs(self, side, a):
        return LegExpansion(side, ((Element.basis(a), OuterLeg("1")),))


def _pair_with(x: Element, v) -> Element:
    return Element.wrap({(lab, v): c for lab, c in x.items()})


def trivial_right_unit(alg: AlgebraSpec = None) -> RightUnitCoproduct:
    return RightUnitCoproduct(alg if alg is not None else monoid_algebra())


def unital_right_unit(dimension: int = 2) -> TensorValuedCoproduct:
    """Δ(a) = a⊗1 on the unital diagonal algebra ℚ^n, where 1 ∈ A."""
    alg = finite_algebra(f"Q^{dimension}", dimension, [(i, i, i, 1) for i in range(dimension)])
    unit = alg.unit
    cp = TensorValuedCoproduct(alg, lambda a: pair(Element.basis(a), unit),
                               f"Δ[a⊗1 on Q^{dimension}]")
    return cp


def tensor_split(B: AlgebraSpec = None, C: AlgebraSpec = None) -> SandwichCoproduct:
    """A = B⊗C and Δ(b⊗c) = b⊗1_C⊗1_B⊗c."""
    B = B if B is not None else monoid_algebra()
    C = C if C is not None else monoid_algebra()
    cp = SandwichCoproduct(B, C, UnitE(C, B), "Δ[tensor split]")
    return cp
