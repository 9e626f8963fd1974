"""Coproducts Δ(x⊗y) = x⊗E⊗y on A = X⊗Y for a multiplier E of Y⊗X.

An E object describes its actions on basis tensors of Y⊗X and its four
one-leg products, each a finite Element or an Infinite value with a probe in
Y⊗X.  ``legs()`` expands E as Σ q_k⊗p_k with lines on both legs.
"""
from __future__ import annotations

from typing import Callable, Optional

from ..algebra import INF, AlgebraSpec, TensorAlgebra
from ..coproduct.core import (Coproduct, Infinite, LegExpansion, LegFamily, Line, OuterLeg)
from ..element import Element, add_term, pair, render_label
from ..errors import NonIdempotentQ
from ..multiplier import Multiplier
from ..scalar import T
from ..schemes import IntPairs, Naturals
from .matrix import diagonal_algebra, matrix_units


class SandwichE:
    """Interface of the middle multiplier E ∈ M(Y⊗X)."""

    name = "E"

    def __init__(self, Y: AlgebraSpec, X: AlgebraSpec):
        self.Y = Y
        self.X = X
        self.square = TensorAlgebra(Y, X)

    def act_left(self, y, x) -> Element:            # E(e_y⊗e_x)
        raise NotImplementedError

    def act_right(self, y, x) -> Element:           # (e_y⊗e_x)E
        raise NotImplementedError

    def times_one_x(self, x):                       # E(1⊗e_x)
        raise NotImplementedError

    def one_x_times(self, x):                       # (1⊗e_x)E
        raise NotImplementedError

    def y_one_times(self, y):                       # (e_y⊗1)E
        raise NotImplementedError

    def times_y_one(self, y):                       # E(e_y⊗1)
        raise NotImplementedError

    def legs(self):
        """(terms, families, left_line, right_line) for E = Σ q⊗p.

        ``left_line(yl)``/``right_line(xl)`` give the largest term index whose
        Y-leg (X-leg) contains the label, None or INF.
        """
        raise NotImplementedError

    def multiplier(self) -> Multiplier:
        return Multiplier(self.square, lambda k: self.act_left(*k), lambda k: self.act_right(*k),
                          self.name)


# -- E = Σ_k q_k ⊗ δ_k over a function algebra X ---------------------------------------------

class IdempotentFamilyE(SandwichE):
    """E = Σ_k q_k⊗p_k where p_k are the minimal idempotents of X and q_k ∈ Y.

    ``q(k)`` gives q_k.  ``right_keys(y)`` / ``left_keys(y)`` list the k with
    e_y·q_k ≠ 0 (resp. q_k·e_y ≠ 0), or return ("inf", n ↦ k_n, text) when
    there are infinitely many.  ``keys_containing(yl)`` lists the k whose q_k
    has yl in its support (or INF).
    """

    def __init__(self, Y, X, q: Callable, right_keys: Callable, left_keys: Callable,
                 keys_containing: Callable, name: str = "E", check_depth: int = 8):
        super().__init__(Y, X)
        self._q = q
        self._qcache = {}
        self.right_keys = right_keys
        self.left_keys = left_keys
        self.keys_containing = keys_containing
        self.name = name
        self._verify_idempotents(check_depth)

    def q(self, k) -> Element:
        v = self._qcache.get(k)
        if v is None:
            v = self._q(k)
            self._qcache[k] = v
        return v

    def _verify_idempotents(self, depth):
        from ..algebra import mul
        for k in self.X.enumerate(depth):
            qk = self.q(k)
            if mul(self.Y, qk, qk) != qk:
                raise NonIdempotentQ(f"q_{k} = {qk.render()} is not idempotent", k)

    def act_left(self, y, x):
        from ..algebra import mul_basis_right
        return _with_second(mul_basis_right(self.Y, self.q(x), y), x)

    def act_right(self, y, x):
        from ..algebra import mul_basis_left
        return _with_second(mul_basis_left(self.Y, y, self.q(x)), x)

    def times_one_x(self, x):
        return _with_second(self.q(x), x)

    one_x_times = times_one_x

    def _sum(self, y, keys, side):
        from ..algebra import mul_basis_left, mul_basis_right
        prod = (lambda k: mul_basis_left(self.Y, y, self.q(k))) if side == "right" else \
            (lambda k: mul_basis_right(self.Y, self.q(k), y))
        if isinstance(keys, tuple) and keys and keys[0] == "inf":
            _, seq, text = keys
            Y = self.Y

            def probe(n):
                k = seq(n)
                val = prod(k)
                unit = Y.local_unit_for(list(val) + [y] + list(self.q(k)))
                z = pair(unit, Element.basis(k))
                w = (val.canonical()[0][0], k)
                return z, w

            return Infinite(text, probe, "k")
        acc = {}
        for k in keys:
            for lab, c in prod(k).items():
                add_term(acc, (lab, k), c)
        return Element.wrap(acc)

    def y_one_times(self, y):
        return self._sum(y, self.right_keys(y), "right")

    def times_y_one(self, y):
        return self._sum(y, self.left_keys(y), "left")

    def legs(self):
        scheme = self.X.scheme

        def term(n):
            k = scheme.at(n)
            return self.q(k), Element.basis(k)

        def left_line(yl):
            keys = self.keys_containing(yl)
            if keys is INF:
                return INF
            return max((scheme.position(k) for k in keys), default=None)

        def right_line(xl):
            return scheme.position(xl)

        return (), (term,), left_line, right_line


def _with_second(y_el: Element, x) -> Element:
    return Element.wrap({(lab, x): c for lab, c in y_el.items()})


# -- E = Σ_j e_1j ⊗ e_j1 ------------------------------------------------------------------------

class ColumnRowE(SandwichE):
    """E = Σ_j e_1j⊗e_j1 in M(C⊗C)."""

    name = "Σ_j e_1j⊗e_j1"

    def act_left(self, y, x):
        (a, b), (c, d) = y, x
        return Element.basis(((1, b), (a, d))) if c == 1 else Element.zero()

    def act_right(self, y, x):
        (a, b), (c, d) = y, x
        return Element.basis(((a, d), (c, 1))) if b == 1 else Element.zero()

    def times_one_x(self, x):
        r, s = x
        if r != 1:
            return Element.zero()

        def probe(n):
            j = n + 1
            return Element.basis(((j, j), (s, s))), ((1, j), (j, s))

        return Infinite(f"Σ_j e_1j⊗e_j{s}", probe, "j")

    def one_x_times(self, x):
        r, s = x
        return Element.basis(((1, s), (r, 1)))

    def y_one_times(self, y):
        r, s = y
        if s != 1:
            return Element.zero()

        def probe(n):
            j = n + 1
            return Element.basis(((j, j), (1, 1))), ((r, j), (j, 1))

        return Infinite(f"Σ_j e_{r}j⊗e_j1", probe, "j")

    def times_y_one(self, y):
        r, s = y
        return Element.basis(((1, s), (r, 1)))

    def legs(self):
        def term(n):
            j = n + 1
            return Element.basis((1, j)), Element.basis((j, 1))

        def left_line(yl):
            return yl[1] - 1 if yl[0] == 1 else None

        def right_line(xl):
            return xl[0] - 1 if xl[1] == 1 else None

        return (), (term,), left_line, right_line


# -- E = 1⊗1 --------------------------------------------------------------------------------------

class UnitE(SandwichE):
    """E = 1_Y⊗1_X; every one-leg product is a multiplier outside Y⊗X."""

    name = "1⊗1"

    def act_left(self, y, x):
        return Element.basis((y, x))

    act_right = act_left

    def _outer(self, text, fixed: Element, fixed_second: bool, other: AlgebraSpec):
        scheme = other.scheme

        def probe(n):
            k = scheme.at(n)
            alg = self.X if fixed_second else self.Y
            unit = alg.local_unit_for(list(fixed))
            if fixed_second:
                z = pair(Element.basis(k), unit)
                w = (k, fixed.canonical()[0][0])
            else:
                z = pair(unit, Element.basis(k))
                w = (fixed.canonical()[0][0], k)
            return z, w

        return Infinite(text, probe, "k")

    def times_one_x(self, x):
        return self._outer(f"1⊗{_e(x)}", Element.basis(x), True, self.Y)

    one_x_times = times_one_x

    def y_one_times(self, y):
        return self._outer(f"{_e(y)}⊗1", Element.basis(y), False, self.X)

    times_y_one = y_one_times

    def legs(self):
        return ((OuterLeg("1"), OuterLeg("1")),), (), None, None


# -- the coproduct ------------------------------------------------------------------------------------

class SandwichCoproduct(Coproduct):
    def __init__(self, X: AlgebraSpec, Y: AlgebraSpec, E: SandwichE, name: str):
        self.X, self.Y, self.E = X, Y, E
        super().__init__(TensorAlgebra(X, Y), name)

    @staticmethod
    def _assemble(L: Element, mid: Element, R: Element) -> Element:
        acc = {}
        for x1, c1 in L.items():
            for (y1, x2), c2 in mid.items():
                c12 = c1 * c2
                for y2, c3 in R.items():
                    add_term(acc, ((x1, y1), (x2, y2)), c12 * c3)
        return Element.wrap(acc)

    def delta_left(self, a, u, v):
        (x, y), (ux, uy), (vx, vy) = a, u, v
        L = self.X.product(x, ux)
        R = self.Y.product(y, vy)
        if not L or not R:
            return Element.zero()
        return self._assemble(L, self.E.act_left(uy, vx), R)

    def delta_right(self, a, u, v):
        (x, y), (ux, uy), (vx, vy) = a, u, v
        L = self.X.product(ux, x)
        R = self.Y.product(vy, y)
        if not L or not R:
            return Element.zero()
        return self._assemble(L, self.E.act_right(uy, vx), R)

    def _combine(self, L: Element, mid, R: Element):
        if not L or not R:
            return Element.zero()
        if isinstance(mid, Element):
            return self._assemble(L, mid, R)
        X, Y = self.X, self.Y
        lx, cl = L.canonical()[0]
        ry, cr = R.canonical()[0]

        def probe(n, inner=mid.probe):
            z, (w1, w2) = inner(n)
            ux = X.local_unit_for(list(L))
            uy = Y.local_unit_for(list(R))
            acc = {}
            for (z1, z2), c in z.items():
                for i, a in ux.items():
                    for j, b in uy.items():
                        add_term(acc, ((i, z1), (z2, j)), c * a * b)
            return Element.wrap(acc), ((lx, w1), (w2, ry))

        return Infinite(f"{L.render()}⊗[{mid.description}]⊗{R.render()}", probe, mid.parameter)

    def t1(self, a, b):
        (x, y), (x2, y2) = a, b
        return self._combine(Element.basis(x), self.E.times_one_x(x2), self.Y.product(y, y2))

    def t3(self, a, b):
        (x, y), (x2, y2) = a, b
        return self._combine(Element.basis(x), self.E.one_x_times(x2), self.Y.product(y2, y))

    def t2(self, c, a):
        (x2, y2), (x, y) = c, a
        return self._combine(self.X.product(x2, x), self.E.y_one_times(y2), Element.basis(y))

    def t4(self, c, a):
        (x2, y2), (x, y) = c, a
        return self._combine(self.X.product(x, x2), self.E.times_y_one(y2), Element.basis(y))

    def legs(self, side, a):
        x, y = a
        terms, families, left_line, right_line = self.E.legs()
        ex, ey = Element.basis(x), Element.basis(y)

        def lift(q, p):
            first = OuterLeg(f"{_e(x)}⊗{q.render()}") if isinstance(q, OuterLeg) else pair(ex, q)
            second = OuterLeg(f"{p.render()}⊗{_e(y)}") if isinstance(p, OuterLeg) else pair(p, ey)
            return first, second

        out_terms = tuple(lift(q, p) for q, p in terms)
        out_fams = []
        for fam in families:
            if side == "left":
                line = Line(("sandwich-left", x), lambda k, x=x: left_line(k[1]) if k[0] == x else None,
                            f"first legs {_e(x)}⊗q")
            else:
                line = Line(("sandwich-right", y), lambda k, y=y: right_line(k[0]) if k[1] == y else None,
                            f"second legs p⊗{_e(y)}")
            out_fams.append(LegFamily(lambda n, fam=fam: lift(*fam(n)), (line,),
                                      f"{_e(x)}⊗{self.E.name}⊗{_e(y)}"))
        return LegExpansion(side, out_terms, tuple(out_fams))

    def canonical_idempotent(self) -> Multiplier:
        """1⊗E⊗1 acting on A⊗A."""
        E = self.E
        sq = self.square

        def left(k):
            (x1, y1), (x2, y2) = k
            return self._assemble(Element.basis(x1), E.act_left(y1, x2), Element.basis(y2))

        def right(k):
            (x1, y1), (x2, y2) = k
            return self._assemble(Element.basis(x1), E.act_right(y1, x2), Element.basis(y2))

        return Multiplier(sq, left, right, f"1⊗{E.name}⊗1")


# -- the gallery's E families ---------------------------------------------------------------------

def _e(label) -> str:
    return "e" + render_label(label)


def _inf(seq, text):
    return ("inf", seq, text)


def ex4_3() -> SandwichCoproduct:
    C = matrix_units()
    return SandwichCoproduct(C, C, ColumnRowE(C, C), "Δ[ex4_3]")


def ex3_32() -> SandwichCoproduct:
    P = AlgebraSpec("F(N)", Naturals(0), lambda i, j: Element.basis(i) if i == j else Element.zero(),
                    local_unit=lambda n: Element({k: 1 for k in range(n)}), involution=Element.basis)
    E = IdempotentFamilyE(P, P, Element.basis, lambda y: [y], lambda y: [y], lambda yl: [yl],
                          "Σ_x δ_x⊗δ_x")
    cp = SandwichCoproduct(P, P, E, "Δ[ex3_32]")
    cp.idempotent = cp.canonical_idempotent()
    return cp


def _matrix_q_family(q, right_keys, left_keys, keys_containing, name):
    C = matrix_units()
    P = diagonal_algebra(1)
    E = IdempotentFamilyE(C, P, q, right_keys, left_keys, keys_containing, name)
    return P, C, E


def ex4_4(q: Optional[Callable] = None, right_keys=None, left_keys=None,
          keys_containing=None, name: str = "Σ_j q_j⊗p_j") -> SandwichCoproduct:
    """E = Σ_j q_j⊗p_j on A = P⊗C; by default q_j = p_j."""
    if q is None:
        q = lambda j: Element.basis((j, j))
        right_keys = lambda y: [y[1]]
        left_keys = lambda y: [y[0]]
        keys_containing = lambda yl: [yl[0]] if yl[0] == yl[1] else []
        name = "Σ_j p_j⊗p_j"
    P, C, E = _matrix_q_family(q, right_keys, left_keys, keys_containing, name)
    cp = SandwichCoproduct(P, C, E, "Δ[ex4_4]")
    cp.idempotent = cp.canonical_idempotent()
    return cp


def qn_rule(n) -> Element:
    """q_1 = e_11 and q_n = e_n1 + e_nn for n > 1."""
    if n == 1:
        return Element.basis((1, 1))
    return Element({(n, 1): 1, (n, n): 1})


def qn_mixed() -> SandwichCoproduct:
    def right_keys(y):          # e_rs q_n ≠ 0 iff n = s
        return [y[1]]

    def left_keys(y):           # q_n e_rs ≠ 0 iff n = r, or r = 1 (then every n)
        if y[0] == 1:
            return _inf(lambda n: n + 1, "e_11⊗p_1 + Σ_(j>1) e_j1⊗p_j" if y == (1, 1)
                        else f"Σ_j q_j {_e(y)}⊗p_j")
        return [y[0]]

    def keys_containing(yl):
        a, b = yl
        return [a] if (b == 1 or a == b) else []

    cp = ex4_4(qn_rule, right_keys, left_keys, keys_containing, "Σ_n q_n⊗p_n")
    cp.name = "Δ[qn]"
    return cp


def triangular_rule(t):
    def q(k):
        i, j = k
        if i == j:
            return Element.basis((i, i))
        return Element({(i, i): 1, (i, j): t})
    return q


def ex3_24(t=T) -> SandwichCoproduct:
    """A = P_u⊗C_u with E = Σ_(i≤j) q_ij⊗p_ij, q_ij = e_ii + t e_ij."""
    Cu = matrix_units(upper=True)
    Pu = AlgebraSpec("P_u", IntPairs(1, upper=True),
                     lambda a, b: Element.basis(a) if a == b else Element.zero(),
                     local_unit=lambda n: Element({k: 1 for k in IntPairs(1, True).up_to_shell(n - 1)}),
                     involution=Element.basis)

    def right_keys(y):          # e_rs q_ij ≠ 0 iff i = s, for every j ≥ s
        s = y[1]
        return _inf(lambda n: (s, s + n), f"Σ_(j≥{s}) {_e(y)}q_({s},j)⊗p_({s},j)")

    def left_keys(y):           # q_ij e_rs ≠ 0 iff i = r (any j ≥ r) or j = r
        r = y[0]
        return _inf(lambda n: (r, r + n), f"Σ q_ij {_e(y)}⊗p_ij")

    def keys_containing(yl):
        a, b = yl
        return INF if a == b else [(a, b)]

    E = IdempotentFamilyE(Cu, Pu, triangular_rule(t), right_keys, left_keys, keys_containing,
                          "Σ_(i≤j) q_ij⊗p_ij")
    cp = SandwichCoproduct(Pu, Cu, E, "Δ[ex3_24]")
    cp.idempotent = cp.canonical_idempotent()
    return cp


def ex3_25(t=T) -> SandwichCoproduct:
    """A = (P⊗P)⊗C with E = Σ_(i,j) q_ij⊗p_ij, q_ij = e_ii + t e_ij for i ≠ j."""
    C = matrix_units()
    PP = AlgebraSpec("P⊗P", IntPairs(1), lambda a, b: Element.basis(a) if a == b else Element.zero(),
                     local_unit=lambda n: Element({k: 1 for k in IntPairs(1).up_to_shell(n - 1)}),
                     involution=Element.basis)

    def right_keys(y):          # e_rs q_ij ≠ 0 iff i = s
        s = y[1]
        return _inf(lambda n: (s, n + 1), f"Σ_j {_e(y)}q_({s},j)⊗p_({s},j)")

    def left_keys(y):           # q_ij e_rs ≠ 0 iff i = r or j = r
        r = y[0]
        return _inf(lambda n: (r, n + 1), f"Σ q_ij {_e(y)}⊗p_ij")

    def keys_containing(yl):
        a, b = yl
        return INF if a == b else [(a, b)]

    E = IdempotentFamilyE(C, PP, triangular_rule(t), right_keys, left_keys, keys_containing,
                          "Σ_(i,j) q_ij⊗p_ij")
    cp = SandwichCoproduct(PP, C, E, "Δ[ex3_25]")
    cp.idempotent = cp.canonical_idempotent()
    return cp


def e_adjoint_witness(cp: SandwichCoproduct, depth: int = 4):
    """First basis tensor where E* differs from E (None if E is self-adjoint to depth)."""
    E = cp.E
    sq = E.square
    labels = sq.enumerate(depth * depth)
    for k in labels:
        # (E*)(z) = (z* E)*
        star_left = sq.star(E.act_right(*_star_label(sq, k)))
        if star_left != E.act_left(*k):
            return k
    return None


def _star_label(sq, k):
    z = sq.involution(k)
    (lab, c), = z.items()
    return lab
