"""Algebras over finite or countable bases given by structure-constant oracles."""
from __future__ import annotations

from typing import Callable, Optional

from .element import Element, add_into, add_term
from .errors import SchemeMismatch
from .linalg import Echelon
from .schemes import FiniteLabels, IndexScheme, ProductScheme, check_depth
from .verdict import Verdict, fails, verified


class AlgebraSpec:
    """Basis scheme plus product oracle ``product(i, j) -> Element``.

    ``local_unit(n)`` (optional) returns an element acting as identity on both
    sides of every basis label of shell < n; all countable algebras of the
    gallery have such local units.
    """

    def __init__(self, name: str, scheme: IndexScheme, product: Callable,
                 dimension: Optional[int] = None, involution: Optional[Callable] = None,
                 local_unit: Optional[Callable[[int], Element]] = None,
                 unit: Optional[Element] = None, validate: bool = True):
        self.name = name
        self.scheme = scheme
        self._product = product
        self.dimension = dimension if dimension is not None else scheme.size()
        self.involution = involution
        self._local_unit = local_unit
        self.unit = unit
        self._cache = {}
        if validate:
            self._validate()

    def _validate(self):
        probe = self.scheme.enumerate(3)
        for i in probe:
            for j in probe:
                out = self.product(i, j)
                for k in out:
                    if not self.scheme.contains(k):
                        raise SchemeMismatch(f"{self.name}: product of {i}, {j} produced foreign label {k!r}")

    @property
    def finite(self) -> bool:
        return self.dimension is not None

    def product(self, i, j) -> Element:
        key = (i, j)
        out = self._cache.get(key)
        if out is None:
            out = self._product(i, j)
            if not isinstance(out, Element):
                out = Element(out)
            self._cache[key] = out
        return out

    def basis(self) -> list:
        if not self.finite:
            raise ValueError(f"{self.name} is not finite-dimensional")
        return self.scheme.enumerate(self.dimension)

    def enumerate(self, depth: int) -> list:
        return self.scheme.enumerate(depth)

    def pool(self, depth: int) -> list:
        return self.scheme.pool(depth)

    def e(self, idx, coef=1) -> Element:
        if not self.scheme.contains(idx):
            raise SchemeMismatch(f"{idx!r} is not a label of {self.name}")
        return Element.basis(idx, coef)

    def local_unit(self, n: int) -> Optional[Element]:
        if self.unit is not None:
            return self.unit
        if self._local_unit is None:
            return None
        return self._local_unit(n)

    def local_unit_for(self, labels) -> Optional[Element]:
        labels = list(labels)
        radius = max((self.scheme.shell(k) for k in labels), default=0)
        return self.local_unit(radius + 1)

    def star(self, x: Element) -> Element:
        if self.involution is None:
            raise ValueError(f"{self.name} has no involution")
        acc = {}
        from .scalar import conj
        for idx, c in x.items():
            add_into(acc, self.involution(idx)._c, conj(c))
        return Element.wrap(acc)

    def __repr__(self):
        return f"AlgebraSpec({self.name})"


def multiply(a: Element, b: Element, alg: AlgebraSpec) -> Element:
    """Bilinear extension of the structure oracle."""
    contains = alg.scheme.contains
    for idx in a:
        if not contains(idx):
            raise SchemeMismatch(f"{idx!r} is not a label of {alg.name}")
    for idx in b:
        if not contains(idx):
            raise SchemeMismatch(f"{idx!r} is not a label of {alg.name}")
    return mul(alg, a, b)


def mul(alg: AlgebraSpec, a: Element, b: Element) -> Element:
    """multiply() without the label check, for internal hot loops."""
    acc = {}
    product = alg.product
    for i, x in a._c.items():
        for j, y in b._c.items():
            p = product(i, j)
            if p._c:
                add_into(acc, p._c, x * y)
    return Element.wrap(acc)


def mul_basis_left(alg, i, b: Element) -> Element:
    acc = {}
    for j, y in b._c.items():
        add_into(acc, alg.product(i, j)._c, y)
    return Element.wrap(acc)


def mul_basis_right(alg, a: Element, j) -> Element:
    acc = {}
    for i, x in a._c.items():
        add_into(acc, alg.product(i, j)._c, x)
    return Element.wrap(acc)


# -- tensor products ----------------------------------------------------------------

class TensorAlgebra(AlgebraSpec):
    """A ⊗ B with componentwise product; labels are pairs."""

    def __init__(self, first: AlgebraSpec, second: AlgebraSpec):
        self.first = first
        self.second = second
        dim = None
        if first.finite and second.finite:
            dim = first.dimension * second.dimension
        unit = None
        if first.unit is not None and second.unit is not None:
            from .element import pair
            unit = pair(first.unit, second.unit)
        local = None
        if (first.local_unit(1) is not None) and (second.local_unit(1) is not None):
            from .element import pair
            local = lambda n: pair(first.local_unit(n), second.local_unit(n))
        involution = None
        if first.involution is not None and second.involution is not None:
            from .element import pair
            involution = lambda k: pair(first.involution(k[0]), second.involution(k[1]))
        super().__init__(f"{first.name}⊗{second.name}", ProductScheme(first.scheme, second.scheme),
                         self._tensor_product, dim, involution=involution, local_unit=local,
                         unit=unit, validate=False)

    def _tensor_product(self, i, j) -> Element:
        x = self.first.product(i[0], j[0])
        if not x:
            return Element.zero()
        y = self.second.product(i[1], j[1])
        out = {}
        for a, c in x._c.items():
            for b, d in y._c.items():
                out[(a, b)] = c * d
        return Element.wrap(out)

    def flip(self, x: Element) -> Element:
        return Element.wrap({(k[1], k[0]): v for k, v in x._c.items()})


def tensor_square(alg: AlgebraSpec) -> TensorAlgebra:
    cached = getattr(alg, "_square", None)
    if cached is None:
        cached = TensorAlgebra(alg, alg)
        alg._square = cached
    return cached


def one_tensor_left(alg, b: Element, y: Element) -> Element:
    """(1 ⊗ b) · y for y in A ⊗ A."""
    acc = {}
    for (u, v), c in y._c.items():
        for j, x in b._c.items():
            for k, d in alg.product(j, v)._c.items():
                add_term(acc, (u, k), c * x * d)
    return Element.wrap(acc)


def one_tensor_right(alg, y: Element, b: Element) -> Element:
    """y · (1 ⊗ b)."""
    acc = {}
    for (u, v), c in y._c.items():
        for j, x in b._c.items():
            for k, d in alg.product(v, j)._c.items():
                add_term(acc, (u, k), c * x * d)
    return Element.wrap(acc)


def tensor_one_left(alg, c_el: Element, y: Element) -> Element:
    """(c ⊗ 1) · y."""
    acc = {}
    for (u, v), c in y._c.items():
        for j, x in c_el._c.items():
            for k, d in alg.product(j, u)._c.items():
                add_term(acc, (k, v), c * x * d)
    return Element.wrap(acc)


def tensor_one_right(alg, y: Element, c_el: Element) -> Element:
    """y · (c ⊗ 1)."""
    acc = {}
    for (u, v), c in y._c.items():
        for j, x in c_el._c.items():
            for k, d in alg.product(u, j)._c.items():
                add_term(acc, (k, v), c * x * d)
    return Element.wrap(acc)


# -- functionals ------------------------------------------------------------------------

class Unbounded:
    """Marker: a functional is known to be nonzero infinitely often along a line."""

    def __repr__(self):
        return "INF"


INF = Unbounded()


class Functional:
    """A linear functional given by its values on basis labels.

    Support hints drive the slice computations of the dual module:
    ``support`` is an exact finite support; ``line_bound(line)`` may return the
    last parameter at which the functional can be nonzero along a line, ``INF``
    or ``None`` (unknown).
    """

    def __init__(self, rule: Callable, support: Optional[list] = None, name: str = "ω",
                 line_bound: Optional[Callable] = None):
        self.rule = rule
        self.support = support
        self.name = name
        self._line_bound = line_bound
        self._cache = {}

    @classmethod
    def from_values(cls, values: dict, name: str = "ω") -> "Functional":
        values = {k: v for k, v in values.items() if v}
        return cls(lambda k: values.get(k, 0), support=list(values), name=name)

    @classmethod
    def coordinate(cls, idx, name: Optional[str] = None) -> "Functional":
        return cls.from_values({idx: 1}, name or f"f{idx}")

    @classmethod
    def zero(cls) -> "Functional":
        return cls(lambda k: 0, support=[], name="0")

    def at(self, idx):
        if self.support is not None:
            # exact support: avoid calling rules outside it
            if idx not in self._cache:
                self._cache[idx] = self.rule(idx) if idx in self._support_set() else 0
            return self._cache[idx]
        v = self._cache.get(idx)
        if v is None:
            v = self.rule(idx)
            self._cache[idx] = v
        return v

    def _support_set(self):
        s = getattr(self, "_sset", None)
        if s is None:
            s = self._sset = frozenset(self.support)
        return s

    def __call__(self, x: Element):
        total = 0
        for idx, c in x._c.items():
            v = self.at(idx)
            if v:
                total += c * v
        return total

    def bound_on(self, line):
        """Last parameter along ``line`` with a possibly nonzero value (or -1, INF, None)."""
        if self.support is not None:
            best = -1
            for idx in self.support:
                if not self.at(idx):
                    continue
                hit = line.hits(idx)
                if hit is None:
                    continue
                if hit is INF:
                    return INF
                best = max(best, hit)
            return best
        if self._line_bound is not None:
            return self._line_bound(line)
        return None

    def scale(self, s) -> "Functional":
        if self.support is not None:
            return Functional(lambda k: s * self.at(k), list(self.support), f"{s}·{self.name}")
        return Functional(lambda k: s * self.at(k), None, f"{s}·{self.name}", self._line_bound)

    def __add__(self, other: "Functional") -> "Functional":
        support = None
        if self.support is not None and other.support is not None:
            support = list(dict.fromkeys(list(self.support) + list(other.support)))
        if self.support is None or other.support is None:
            def bound(line, a=self, b=other):
                x, y = a.bound_on(line), b.bound_on(line)
                if x is None or y is None:
                    return None
                if x is INF or y is INF:
                    return INF
                return max(x, y)
        else:
            bound = None
        return Functional(lambda k: self.at(k) + other.at(k), support,
                          f"({self.name}+{other.name})", bound)

    def render(self):
        return self.name

    def __repr__(self):
        return f"Functional({self.name})"


# -- checks ---------------------------------------------------------------------------------

def _targets_and_pool(alg, depth):
    check_depth(depth)
    if alg.finite:
        basis = alg.basis()
        return basis, basis, True
    return alg.enumerate(depth), alg.pool(depth), False


def check_associativity(alg: AlgebraSpec, depth: int) -> Verdict:
    labels, _, exact = _targets_and_pool(alg, depth)
    for i in labels:
        for j in labels:
            eij = alg.product(i, j)
            for k in labels:
                left = mul_basis_right(alg, eij, k)
                right = mul_basis_left(alg, i, alg.product(j, k))
                if left != right:
                    return fails((i, j, k), depth, "(e_i e_j) e_k differs from e_i (e_j e_k)")
    return verified(depth, exact=exact)


def check_nondegenerate(alg: AlgebraSpec, depth: int) -> Verdict:
    """No nonzero a in the truncated span with a·b = 0 for all b (and mirror)."""
    targets, pool, exact = _targets_and_pool(alg, depth)
    for side in ("left", "right"):
        vectors = []
        for i in targets:
            vec = {}
            for b in pool:
                p = alg.product(i, b) if side == "left" else alg.product(b, i)
                for k, c in p.items():
                    vec[(b, k)] = c
            vectors.append(vec)
        from .linalg import kernel
        ker = kernel(vectors)
        if ker:
            rel = ker[0]
            witness = Element({targets[pos]: c for pos, c in rel.items()})
            detail = ("a·b = 0 for every basis b" if side == "left" else "b·a = 0 for every basis b")
            if not exact:
                detail += " within the truncation"
            return fails(witness.canonicalize(), depth, detail)
    return verified(depth, exact=exact)


def check_idempotent_algebra(alg: AlgebraSpec, depth: int) -> Verdict:
    targets, pool, exact = _targets_and_pool(alg, depth)
    ech = Echelon(track=False)
    for i in pool:
        for j in pool:
            p = alg.product(i, j)
            if p:
                ech.add(dict(p._c))
    for i in targets:
        if not ech.contains({i: 1}):
            return fails(Element.basis(i), depth, "not in the span of products" +
                         ("" if exact else " of truncated pairs"))
    return verified(depth, exact=exact)


# -- construction helpers ----------------------------------------------------------------------

def finite_algebra(name: str, dimension: int, constants, labels=None, involution=None) -> AlgebraSpec:
    """Finite algebra from entries (i, j, k, scalar): e_i e_j contains scalar·e_k."""
    labels = list(range(dimension)) if labels is None else list(labels)
    table = {}
    for i, j, k, s in constants:
        acc = table.setdefault((i, j), {})
        add_term(acc, k, s)
    scheme = FiniteLabels(labels, name)
    for (i, j), acc in table.items():
        for k in [i, j, *acc]:
            if not scheme.contains(k):
                raise SchemeMismatch(f"label {k!r} outside 0..{dimension - 1}")
    unit = _find_unit(labels, table)
    return AlgebraSpec(name, scheme, lambda i, j: Element.wrap(dict(table.get((i, j), {}))),
                       dimension, involution=involution, unit=unit)


def _find_unit(labels, table):
    """Unit element if one exists (solved exactly), else None."""
    from .linalg import solve, RHS
    equations = []
    for b in labels:
        for side in (0, 1):
            coeffs = {}
            for u in labels:
                key = (u, b) if side == 0 else (b, u)
                for k, c in table.get(key, {}).items():
                    coeffs.setdefault(k, {})[u] = c
            for k in labels:
                eq = dict(coeffs.get(k, {}))
                if k == b:
                    eq[RHS] = 1
                if eq:
                    equations.append(eq)
    if not equations:
        return None
    sol, _, cert = solve(equations)
    if sol is None:
        return None
    return Element({u: sol.get(u, 0) for u in labels})
