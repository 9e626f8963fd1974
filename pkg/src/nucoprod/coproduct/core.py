"""Coproducts with values in M(A⊗A): action rules, one-sided oracles and leg expansions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

from ..algebra import AlgebraSpec, Functional, tensor_square
from ..element import Element, add_into
from ..multiplier import Multiplier


class Infinite:
    """The value of a one-sided product is a multiplier outside A⊗A.

    ``probe(n)`` returns ``(y_n, w_n)``: an element y_n of A⊗A and a label w_n
    such that the coefficient of w_n in m·y_n is nonzero.  The labels w_n are
    pairwise distinct, so finitely many terms cannot account for all of them.
    """

    def __init__(self, description: str, probe: Optional[Callable[[int], tuple]] = None,
                 parameter: str = "n"):
        self.description = description
        self.probe = probe
        self.parameter = parameter

    def render(self):
        return self.description

    def to_json(self):
        return {"infinite": self.description, "parameter": self.parameter}

    def __repr__(self):
        return f"Infinite({self.description!r})"


MapValue = Union[Element, Infinite]


class OuterLeg:
    """A leg of an expansion that is a multiplier of A outside A (such as 1)."""

    def __init__(self, name: str):
        self.name = name

    def render(self):
        return self.name

    def __repr__(self):
        return f"OuterLeg({self.name})"


@dataclass(frozen=True)
class Line:
    """A one-parameter family of labels along which functionals are bounded.

    ``hits(label)`` is the largest parameter n at which ``label`` occurs in the
    family (None if never, INF if for infinitely many n).  ``single`` marks
    lines on which every label occurs at one parameter only.
    """

    key: tuple
    hits: Callable
    description: str = ""
    single: bool = False


@dataclass(frozen=True)
class LegFamily:
    """Terms n ↦ (first_n, second_n), n ≥ 0, of an infinite expansion of Δ(a).

    ``lines`` cover the support of the leg that is paired with a functional
    (the first leg for left slices, the second for right slices).  Legs are
    Elements of A or OuterLeg markers.
    """

    term: Callable[[int], tuple]
    lines: tuple
    description: str


@dataclass(frozen=True)
class LegExpansion:
    side: str
    terms: tuple = ()
    families: tuple = ()


def finite_legs(side: str, x: Element) -> LegExpansion:
    """Leg expansion of an honest element of A⊗A."""
    return LegExpansion(side, tuple((Element.basis(u, c), Element.basis(v)) for (u, v), c in x.items()))


class Coproduct:
    """Δ: A → M(A⊗A) described by its actions on basis tensors.

    Subclasses implement ``delta_left(a, u, v) = Δ(e_a)(e_u⊗e_v)`` and
    ``delta_right(a, u, v) = (e_u⊗e_v)Δ(e_a)``, the four one-sided oracles and
    ``legs``.
    """

    name = "Δ"
    counit: Optional[Functional] = None
    idempotent: Optional[Multiplier] = None
    expected: dict = {}

    def __init__(self, alg: AlgebraSpec, name: Optional[str] = None):
        self.alg = alg
        self.square = tensor_square(alg)
        if name:
            self.name = name
        self._delta = {}

    # -- to be provided ----------------------------------------------------------
    def delta_left(self, a, u, v) -> Element:
        raise NotImplementedError

    def product_support(self, first, second) -> Optional[list]:
        """Labels where a product of functionals supported on ``first`` and
        ``second`` can be nonzero, or None when the family cannot tell."""
        return None

    def delta_right(self, a, u, v) -> Element:
        raise NotImplementedError

    def t1(self, a, b) -> MapValue:
        raise NotImplementedError

    def t2(self, c, a) -> MapValue:
        raise NotImplementedError

    def t3(self, a, b) -> MapValue:
        raise NotImplementedError

    def t4(self, c, a) -> MapValue:
        raise NotImplementedError

    def legs(self, side: str, a) -> LegExpansion:
        raise NotImplementedError

    # -- derived ------------------------------------------------------------------------
    def delta(self, a) -> Multiplier:
        m = self._delta.get(a)
        if m is None:
            m = Multiplier(self.square, lambda k, a=a: self.delta_left(a, k[0], k[1]),
                           lambda k, a=a: self.delta_right(a, k[0], k[1]), f"Δ({a})")
            self._delta[a] = m
        return m

    def delta_of(self, x: Element) -> Multiplier:
        """Δ extended linearly to elements."""
        items = list(x.items())

        def left(k):
            acc = {}
            for a, c in items:
                add_into(acc, self.delta(a).left.on_basis(k)._c, c)
            return Element.wrap(acc)

        def right(k):
            acc = {}
            for a, c in items:
                add_into(acc, self.delta(a).right.on_basis(k)._c, c)
            return Element.wrap(acc)

        return Multiplier(self.square, left, right, f"Δ({x.render()})")

    def oracle(self, which: int):
        return (self.t1, self.t2, self.t3, self.t4)[which - 1]

    def __repr__(self):
        return f"Coproduct({self.name})"


class TensorValuedCoproduct(Coproduct):
    """A coproduct with Δ(A) ⊆ A⊗A given by explicit tensors (finite or coalgebra-like).

    ``values(a)`` returns Δ(e_a) as an Element over pair labels.  All four
    canonical maps are regular and computed by multiplication in A⊗A.
    """

    def __init__(self, alg, values: Callable[..., Element], name=None):
        super().__init__(alg, name)
        self._values = values
        self._vcache = {}

    def value(self, a) -> Element:
        v = self._vcache.get(a)
        if v is None:
            v = self._values(a)
            self._vcache[a] = v
        return v

    def delta_left(self, a, u, v):
        return _mul_sq(self.alg, self.value(a), Element.basis((u, v)))

    def delta_right(self, a, u, v):
        return _mul_sq(self.alg, Element.basis((u, v)), self.value(a))

    def t1(self, a, b):
        from ..algebra import one_tensor_right
        return one_tensor_right(self.alg, self.value(a), Element.basis(b))

    def t2(self, c, a):
        from ..algebra import tensor_one_left
        return tensor_one_left(self.alg, Element.basis(c), self.value(a))

    def t3(self, a, b):
        from ..algebra import one_tensor_left
        return one_tensor_left(self.alg, Element.basis(b), self.value(a))

    def t4(self, c, a):
        from ..algebra import tensor_one_right
        return tensor_one_right(self.alg, self.value(a), Element.basis(c))

    def legs(self, side, a):
        return finite_legs(side, self.value(a))


def _mul_sq(alg, x: Element, y: Element) -> Element:
    sq = tensor_square(alg)
    acc = {}
    for i, a in x._c.items():
        for j, b in y._c.items():
            p = sq.product(i, j)
            if p._c:
                add_into(acc, p._c, a * b)
    return Element.wrap(acc)


class FlippedCoproduct(Coproduct):
    """Δᶜᵒᵖ = σ∘Δ, with oracles derived from those of Δ through the flip."""

    def __init__(self, base: Coproduct):
        super().__init__(base.alg, f"{base.name}ᶜᵒᵖ")
        self.base = base
        self.counit = base.counit

    def delta_left(self, a, u, v):
        return _flip(self.base.delta_left(a, v, u))

    def delta_right(self, a, u, v):
        return _flip(self.base.delta_right(a, v, u))

    def _flip_value(self, value):
        if isinstance(value, Element):
            return _flip(value)
        if value.probe is None:
            return Infinite(f"σ({value.description})", None, value.parameter)

        def probe(n, inner=value.probe):
            y, w = inner(n)
            return _flip(y), (w[1], w[0])
        return Infinite(f"σ({value.description})", probe, value.parameter)

    def t1(self, a, b):
        return self._flip_value(self.base.t4(b, a))

    def t2(self, c, a):
        return self._flip_value(self.base.t3(a, c))

    def t3(self, a, b):
        return self._flip_value(self.base.t2(b, a))

    def t4(self, c, a):
        return self._flip_value(self.base.t1(a, c))

    def legs(self, side, a):
        other = self.base.legs("right" if side == "left" else "left", a)
        return LegExpansion(side, tuple((s, f) for f, s in other.terms),
                            tuple(LegFamily(lambda n, t=fam.term: tuple(reversed(t(n))), fam.lines,
                                            f"σ({fam.description})") for fam in other.families))


def _flip(x: Element) -> Element:
    return Element.wrap({(k[1], k[0]): v for k, v in x._c.items()})


def flip(cp: Coproduct) -> Coproduct:
    return FlippedCoproduct(cp)
