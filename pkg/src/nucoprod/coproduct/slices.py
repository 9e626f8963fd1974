"""Slices (ω⊗ι)Δ(a) and (ι⊗ω)Δ(a) computed from leg expansions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..algebra import INF, Functional
from ..element import Element, add_into
from .core import Coproduct, OuterLeg

ELEMENT = "element"
INFINITE = "infinite"
OUTSIDE = "outside"
UNKNOWN = "unknown"

WINDOW = 48
MAX_GROWTH = 16


@dataclass(frozen=True)
class Slice:
    """Outcome of a slice: an element of A, or why it is not one.

    ``exact`` is False when the family sum was cut off by a window scan rather
    than by a bound known from the functional.
    """

    status: str
    value: Optional[Element] = None
    exact: bool = True
    detail: str = ""

    @property
    def is_element(self) -> bool:
        return self.status == ELEMENT


def _pair(side, first, second):
    return (first, second) if side == "left" else (second, first)


def _parameters(omega, fam, bounds):
    """Parameters to visit: the exact hits when every line is single, else 0..bound."""
    if omega.support is not None and all(line.single for line in fam.lines):
        hits = set()
        for idx in omega.support:
            if omega.at(idx):
                for line in fam.lines:
                    h = line.hits(idx)
                    if h is not None:
                        hits.add(h)
        return sorted(hits)
    return range(max(bounds, default=-1) + 1)


def slice_delta(cp: Coproduct, side: str, omega: Functional, a, window: int = WINDOW) -> Slice:
    """(ω⊗ι)Δ(e_a) for side 'left', (ι⊗ω)Δ(e_a) for side 'right'.

    Family terms are summed up to the bound the functional reports on the
    family's lines.  An unbounded line means ω meets infinitely many terms
    whose other legs are independent, so the slice leaves A.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be left or right, not {side!r}")
    exp = cp.legs(side, a)
    acc = {}
    exact = True
    for term in exp.terms:
        paired, other = _pair(side, *term)
        if isinstance(paired, OuterLeg):
            return Slice(UNKNOWN, detail=f"ω evaluated on {paired.render()}, which lies outside A")
        w = omega(paired)
        if not w:
            continue
        if isinstance(other, OuterLeg):
            return Slice(OUTSIDE, detail=f"the slice contains {w}·{other.render()}")
        add_into(acc, other._c, w)
    for fam in exp.families:
        bounds = [omega.bound_on(line) for line in fam.lines]
        if any(b is INF for b in bounds):
            return Slice(INFINITE, detail=f"ω meets infinitely many terms of {fam.description}")
        if any(b is None for b in bounds):
            size = window
            while True:
                last, vals = -1, []
                for n in range(size):
                    paired, other = _pair(side, *fam.term(n))
                    if isinstance(paired, OuterLeg):
                        return Slice(UNKNOWN, detail=f"ω evaluated on {paired.render()}, which lies outside A")
                    w = omega(paired)
                    if w:
                        last = n
                        vals.append((w, other))
                if last < size // 2:
                    break
                if size >= window * MAX_GROWTH:
                    return Slice(UNKNOWN, detail=f"ω stays nonzero along {fam.description} within the scan")
                size *= 2
            exact = False
        else:
            vals = []
            for n in _parameters(omega, fam, bounds):
                paired, other = _pair(side, *fam.term(n))
                if isinstance(paired, OuterLeg):
                    return Slice(UNKNOWN, detail=f"ω evaluated on {paired.render()}, which lies outside A")
                w = omega(paired)
                if w:
                    vals.append((w, other))
        for w, other in vals:
            if isinstance(other, OuterLeg):
                return Slice(OUTSIDE, detail=f"the slice contains {w}·{other.render()}")
            add_into(acc, other._c, w)
    return Slice(ELEMENT, Element.wrap(acc), exact)


def slice_element(cp: Coproduct, side: str, omega: Functional, x: Element,
                  window: int = WINDOW) -> Slice:
    """Linear extension of slice_delta to elements of A."""
    acc = {}
    exact = True
    for a, c in x.items():
        s = slice_delta(cp, side, omega, a, window)
        if not s.is_element:
            return s
        exact = exact and s.exact
        add_into(acc, s.value._c, c)
    return Slice(ELEMENT, Element.wrap(acc), exact)
