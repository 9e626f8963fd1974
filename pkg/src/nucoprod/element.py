"""Finitely supported linear combinations of basis labels, and tensor helpers."""
from __future__ import annotations

from typing import Callable, Iterable

from .scalar import Scalar, format_scalar, normalize
from .schemes import sort_key


class Element:
    """A finite combination ``sum c_i e_i``; zero coefficients are never stored.

    Equality compares the coefficient maps, so it does not depend on the order in
    which terms were accumulated.  ``canonical()`` gives the sorted form.
    """

    __slots__ = ("_c", "_h")

    def __init__(self, terms=None):
        c = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for idx, coef in items:
                coef = normalize(coef)
                if coef:
                    new = c.get(idx, 0) + coef
                    if new:
                        c[idx] = new
                    else:
                        c.pop(idx, None)
        self._c = c
        self._h = None

    @classmethod
    def wrap(cls, coeffs: dict) -> "Element":
        """Adopt a dict known to contain no zero coefficients."""
        out = cls.__new__(cls)
        out._c = coeffs
        out._h = None
        return out

    @classmethod
    def basis(cls, idx, coef=1) -> "Element":
        return cls.wrap({idx: coef}) if coef else cls.wrap({})

    @classmethod
    def zero(cls) -> "Element":
        return cls.wrap({})

    # -- access -----------------------------------------------------------------
    def items(self):
        return self._c.items()

    def support(self) -> list:
        return list(self._c)

    def coeff(self, idx) -> Scalar:
        return self._c.get(idx, 0)

    def __iter__(self):
        return iter(self._c)

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def __contains__(self, idx):
        return idx in self._c

    def canonical(self) -> tuple:
        return tuple(sorted(self._c.items(), key=lambda kv: sort_key(kv[0])))

    def canonicalize(self) -> "Element":
        return Element.wrap(dict(self.canonical()))

    # -- linear structure -------------------------------------------------------------
    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self._c)
        add_into(out, other._c)
        return Element.wrap(out)

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self._c)
        add_into(out, other._c, -1)
        return Element.wrap(out)

    def __neg__(self):
        return Element.wrap({k: -v for k, v in self._c.items()})

    def scale(self, s: Scalar) -> "Element":
        if not s:
            return Element.wrap({})
        return Element.wrap({k: v * s for k, v in self._c.items()})

    def __rmul__(self, s):
        if isinstance(s, Element):
            return NotImplemented
        return self.scale(normalize(s))

    def __eq__(self, other):
        if isinstance(other, Element):
            return self._c == other._c
        if other == 0:
            return not self._c
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._c.items()))
        return self._h

    def map_labels(self, f: Callable) -> "Element":
        out = {}
        for k, v in self._c.items():
            add_term(out, f(k), v)
        return Element.wrap(out)

    def conjugate(self) -> "Element":
        from .scalar import conj
        return Element.wrap({k: conj(v) for k, v in self._c.items()})

    def render(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for idx, coef in self.canonical():
            label = "e" + render_label(idx)
            if coef == 1:
                parts.append(label)
            elif coef == -1:
                parts.append("-" + label)
            else:
                text = format_scalar(coef)
                if any(ch in text[1:] for ch in "+-") or "/" in text and "t" in text:
                    text = f"({text})"
                parts.append(f"{text}*{label}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def to_json(self):
        return [[label_json(idx), format_scalar(coef)] for idx, coef in self.canonical()]

    def __repr__(self):
        return f"Element({self.render()})"


def render_label(idx) -> str:
    if isinstance(idx, tuple):
        return "[" + ",".join(render_label(x) for x in idx) + "]"
    return str(idx)


def label_json(idx):
    if isinstance(idx, tuple):
        return [label_json(x) for x in idx]
    return idx


def label_from_json(obj):
    if isinstance(obj, list):
        return tuple(label_from_json(x) for x in obj)
    return obj


# -- raw dict helpers (hot paths) ----------------------------------------------------

def add_term(acc: dict, idx, coef) -> None:
    new = acc.get(idx, 0) + coef
    if new:
        acc[idx] = new
    else:
        acc.pop(idx, None)


def add_into(acc: dict, other: dict, factor=1) -> None:
    if factor == 1:
        for k, v in other.items():
            new = acc.get(k, 0) + v
            if new:
                acc[k] = new
            else:
                del acc[k]
    elif factor:
        for k, v in other.items():
            new = acc.get(k, 0) + factor * v
            if new:
                acc[k] = new
            else:
                acc.pop(k, None)


def linear_combination(pairs: Iterable) -> Element:
    """``sum coef * element`` over an iterable of (coef, Element)."""
    acc = {}
    for coef, el in pairs:
        add_into(acc, el._c, coef)
    return Element.wrap(acc)


def extend_linearly(rule: Callable[..., Element], x: Element) -> Element:
    acc = {}
    for idx, coef in x._c.items():
        add_into(acc, rule(idx)._c, coef)
    return Element.wrap(acc)


def tensor(*factors: Element) -> Element:
    """Simple tensor of elements; labels become tuples (one slot per factor)."""
    acc = {(): 1}
    for f in factors:
        nxt = {}
        for k, v in acc.items():
            for i, c in f._c.items():
                nxt[k + (i,)] = v * c
        acc = nxt
    return Element.wrap(acc)


def pair(x: Element, y: Element) -> Element:
    out = {}
    for i, a in x._c.items():
        for j, b in y._c.items():
            out[(i, j)] = a * b
    return Element.wrap(out)


def flip(x: Element) -> Element:
    return Element.wrap({(k[1], k[0]): v for k, v in x._c.items()})


def slice_first(x: Element, functional) -> Element:
    """(f ⊗ ι)(x) for x over pair labels."""
    acc = {}
    for (i, j), c in x._c.items():
        v = functional.at(i)
        if v:
            add_term(acc, j, c * v)
    return Element.wrap(acc)


def slice_second(x: Element, functional) -> Element:
    """(ι ⊗ f)(x) for x over pair labels."""
    acc = {}
    for (i, j), c in x._c.items():
        v = functional.at(j)
        if v:
            add_term(acc, i, c * v)
    return Element.wrap(acc)
