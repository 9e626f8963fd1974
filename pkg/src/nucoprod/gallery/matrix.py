"""The infinite matrix algebra and its coproduct Δ(e_pq) = Σ_j e_pj⊗e_jq."""
from __future__ import annotations

from ..algebra import INF, AlgebraSpec, Functional
from ..coproduct.core import Coproduct, Infinite, LegExpansion, LegFamily, Line
from ..element import Element
from ..schemes import IntPairs


def matrix_units(upper: bool = False) -> AlgebraSpec:
    """span{e_ij : i, j ≥ 1} (or i ≤ j) with e_ij e_kl = δ(j,k) e_il."""
    scheme = IntPairs(1, upper)

    def product(a, b):
        if a[1] != b[0]:
            return Element.zero()
        return Element.basis((a[0], b[1]))

    def local_unit(n):
        return Element({(i, i): 1 for i in range(1, n + 1)})

    involution = None if upper else (lambda k: Element.basis((k[1], k[0])))
    return AlgebraSpec("C_u" if upper else "C", scheme, product, local_unit=local_unit,
                       involution=involution)


def diagonal_algebra(start: int = 1) -> AlgebraSpec:
    """P = span{p_j = e_jj}: pointwise product, labels j."""
    from ..schemes import Naturals
    return AlgebraSpec("P", Naturals(start),
                       lambda i, j: Element.basis(i) if i == j else Element.zero(),
                       local_unit=lambda n: Element({j: 1 for j in range(start, start + n)}),
                       involution=Element.basis)


def row_line(p) -> Line:
    """Labels e_pj, parametrized by n = j - 1."""
    return Line(("row", p), lambda k: k[1] - 1 if k[0] == p else None, f"row {p}")


def col_line(q) -> Line:
    """Labels e_jq, parametrized by n = j - 1."""
    return Line(("col", q), lambda k: k[0] - 1 if k[1] == q else None, f"column {q}")


def matrix_counit() -> Functional:
    """ε(e_pq) = δ(p,q)."""

    def bound(line):
        kind, idx = line.key[0], line.key[1:]
        if kind in ("row", "col"):
            return idx[0] - 1
        return None

    return Functional(lambda k: 1 if k[0] == k[1] else 0, None, "ε", bound)


def banded_functional(values: dict, width: int, name: str = "ω") -> Functional:
    """ω(e_pq) = values[(p - q) mod pattern] on the band |p - q| ≤ width, zero elsewhere.

    ``values`` maps offsets d = q - p in [-width, width] to scalars; the result
    lies in B (row- and column-finite) without having finite support.
    """
    values = {d: v for d, v in values.items() if v and abs(d) <= width}

    def rule(k):
        return values.get(k[1] - k[0], 0)

    def bound(line):
        kind = line.key[0]
        if kind == "row":
            p = line.key[1]
            ds = [d for d in values if p + d >= 1]
            return max(p + d for d in ds) - 1 if ds else -1
        if kind == "col":
            q = line.key[1]
            ds = [d for d in values if q - d >= 1]
            return max(q - d for d in ds) - 1 if ds else -1
        return None

    return Functional(rule, None, name, bound)


def row_functional(row: int = 1, name: str = "ω_row") -> Functional:
    """ω(e_rq) = 1 for every q in one row: column-finite but with an infinite row."""

    def bound(line):
        kind, idx = line.key[0], line.key[1]
        if kind == "row":
            return INF if idx == row else -1
        if kind == "col":
            return row - 1
        return None

    return Functional(lambda k: 1 if k[0] == row else 0, None, name, bound)


def column_functional(col: int = 1, name: str = "ω_col") -> Functional:
    """ω(e_pc) = 1 for every p in one column: row-finite but with an infinite column."""

    def bound(line):
        kind, idx = line.key[0], line.key[1]
        if kind == "col":
            return INF if idx == col else -1
        if kind == "row":
            return col - 1
        return None

    return Functional(lambda k: 1 if k[1] == col else 0, None, name, bound)


class MatrixCoproduct(Coproduct):
    """Δ(e_pq) = Σ_j e_pj⊗e_jq as a multiplier of C⊗C."""

    def __init__(self):
        super().__init__(matrix_units(), "Δ[matrix]")
        self.counit = matrix_counit()

    def delta_left(self, a, u, v):
        # Σ_j e_pj e_ab ⊗ e_jq e_cd keeps j = a when q = c
        (p, q), (a1, b1), (c1, d1) = a, u, v
        if q != c1:
            return Element.zero()
        return Element.basis(((p, b1), (a1, d1)))

    def product_support(self, first, second):
        # f_ab·f_cd = δ(b, c) f_ad under either convention
        return list(dict.fromkeys((a, d) for (a, b) in first for (c, d) in second if b == c))

    def delta_right(self, a, u, v):
        # (e_ab ⊗ e_cd) Σ_j e_pj ⊗ e_jq = δ(b,p) e_aj ⊗ e_cd e_jq with j = d
        (p, q), (a1, b1), (c1, d1) = a, u, v
        if b1 != p:
            return Element.zero()
        return Element.basis(((a1, d1), (c1, q)))

    def t1(self, a, b):
        (p, q), (r, s) = a, b
        if q != r:
            return Element.zero()

        def probe(n):
            j = n + 1
            return Element.basis(((j, j), (s, s))), ((p, j), (j, s))

        return Infinite(f"Σ_j e_{p}j⊗e_j{s}", probe, "j")

    def t2(self, c, a):
        (r, s), (p, q) = c, a
        if s != p:
            return Element.zero()

        def probe(n):
            j = n + 1
            return Element.basis(((j, j), (q, q))), ((r, j), (j, q))

        return Infinite(f"Σ_j e_{r}j⊗e_j{q}", probe, "j")

    def t3(self, a, b):
        (p, q), (r, s) = a, b
        return Element.basis(((p, s), (r, q)))

    def t4(self, c, a):
        (r, s), (p, q) = c, a
        return Element.basis(((p, s), (r, q)))

    def legs(self, side, a):
        p, q = a

        def term(n):
            j = n + 1
            return Element.basis((p, j)), Element.basis((j, q))

        line = row_line(p) if side == "left" else col_line(q)
        return LegExpansion(side, (), (LegFamily(term, (line,), f"Σ_j e_{p}j⊗e_j{q}"),))

    # -- hooks for the dual analysis -------------------------------------------------------------
    def tier_generators(self, tier: str, depth: int) -> list:
        """Generators of B0 (matrix units), B0l (plus whole rows) or B0r (plus whole columns)."""
        labels = self.alg.enumerate(depth)
        gens = [Functional.coordinate(k, f"f{k[0]}{k[1]}") for k in labels]
        rows = sorted({k[0] for k in labels})
        if tier == "B0l":
            gens += [row_functional(r, f"row{r}") for r in rows]
        elif tier == "B0r":
            gens += [column_functional(c, f"col{c}") for c in rows]
        return gens

    def dual_samples(self, rng, count: int) -> list:
        """Seeded banded functionals: row- and column-finite without finite support."""
        out = []
        for n in range(count):
            width = rng.randint(0, 2)
            values = {d: rng.choice([-2, -1, 1, 2, 3]) for d in range(-width, width + 1)
                      if rng.random() < 0.7}
            out.append(banded_functional(values or {0: 1}, width, f"band{n}"))
        return out

    def multiplier_samples(self, rng, count: int) -> list:
        """ε, banded functionals and functionals with one infinite row or column."""
        return ([self.counit] + self.dual_samples(rng, count)
                + [row_functional(1, "row1"), column_functional(1, "col1"),
                   row_functional(2, "row2"), column_functional(2, "col2")])


def matrix_coproduct() -> MatrixCoproduct:
    return MatrixCoproduct()
