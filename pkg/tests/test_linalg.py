"""Sparse exact linear algebra."""
from fractions import Fraction

import numpy as np
from hypothesis import given, strategies as st

from nucoprod.linalg import RHS, Echelon, kernel, nullspace, rank, solve


def test_rank_and_kernel_small():
    """[DERIVED] e0+e1, e1+e2, e0-e2 are dependent with relation v0 - v1 - v2 = 0."""
    vecs = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: -1}]
    assert rank(vecs) == 2
    (rel,) = kernel(vecs)
    combo = {}
    for pos, c in rel.items():
        for k, v in vecs[pos].items():
            combo[k] = combo.get(k, 0) + c * v
    assert all(v == 0 for v in combo.values())


def test_solve_consistent_and_inconsistent():
    """[DERIVED] x+y = 3, x-y = 1 gives (2, 1); x = 1, x = 2 has no solution."""
    sol, free, _ = solve([{"x": 1, "y": 1, RHS: 3}, {"x": 1, "y": -1, RHS: 1}])
    assert sol == {"x": 2, "y": 1} and not free
    sol, _, cert = solve([{"x": 1, RHS: 1}, {"x": 1, RHS: 2}])
    assert sol is None and sorted(cert) == [0, 1]


def test_nullspace_dimension():
    """[DERIVED] one equation in three unknowns leaves a plane."""
    basis = nullspace([{"a": 1, "b": 1, "c": 1}], ["a", "b", "c"])
    assert len(basis) == 2


def test_express_in_span():
    """[DERIVED] express reproduces a vector from tracked inputs."""
    ech = Echelon(track=True)
    ech.add({0: 1, 1: 1}, "u")
    ech.add({1: 1}, "v")
    assert ech.express({0: 2, 1: 5}) == {"u": 2, "v": 3}
    assert ech.express({2: 1}) is None


matrices = st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5)


@given(matrices)
def test_rank_matches_numpy(rows):
    """[DERIVED] exact rank equals numpy's rank on small integer matrices."""
    vecs = [{j: Fraction(v) for j, v in enumerate(r) if v} for r in rows]
    assert rank(vecs) == np.linalg.matrix_rank(np.array(rows, dtype=float))
    assert len(kernel(vecs)) == len(rows) - rank(vecs)
