"""Algebras, tensor squares and their gates."""
import pytest
from hypothesis import given, strategies as st

from nucoprod.algebra import (check_associativity, check_idempotent_algebra, check_nondegenerate,
                              finite_algebra, multiply, tensor_square)
from nucoprod.element import Element
from nucoprod.errors import SchemeMismatch
from nucoprod.gallery.matrix import matrix_units
from nucoprod.verdict import Status

GALLERY = ["group:S3", "group:Z", "group:F2", "monoid:N", "matrix", "sandwich:ex4_3",
           "sandwich:ex3_32", "sandwich:qn", "sandwich:ex3_24", "sandwich:ex3_25", "tensor-split"]


def m2():
    # e_ij at label 2i+j
    consts = [(2 * i + j, 2 * j + l, 2 * i + l, 1) for i in range(2) for j in range(2) for l in range(2)]
    return finite_algebra("M2", 4, consts)


def test_matrix_units_product():
    """[DERIVED] e_12 e_23 = e_13 and e_12 e_12 = 0."""
    C = matrix_units()
    assert multiply(C.e((1, 2)), C.e((2, 3)), C) == Element.basis((1, 3))
    assert multiply(C.e((1, 2)), C.e((1, 2)), C) == Element.zero()


def test_foreign_label_rejected():
    """[DERIVED] labels outside the scheme raise."""
    C = matrix_units(upper=True)
    with pytest.raises(SchemeMismatch):
        C.e((2, 1))
    with pytest.raises(SchemeMismatch):
        multiply(Element.basis((2, 1)), Element.basis((1, 1)), C)


def test_unit_detection():
    """[DERIVED] M2 has unit e11+e22; the span of e11, e12 has none."""
    assert m2().unit == Element({0: 1, 3: 1})
    A = finite_algebra("span", 2, [(0, 0, 0, 1), (0, 1, 1, 1)])
    assert A.unit is None


def test_degenerate_kernel_witness():
    """[DERIVED] in span{e11, e12} every product with e12 on the left vanishes."""
    A = finite_algebra("span", 2, [(0, 0, 0, 1), (0, 1, 1, 1)])
    v = check_nondegenerate(A, 2)
    assert v.status is Status.FAILS
    assert v.witness == Element.basis(1)


@pytest.mark.parametrize("name", GALLERY)
def test_gallery_algebras_are_associative_and_nondegenerate(gallery, name):
    """[DERIVED] brute-force triple check on the truncation."""
    alg = gallery(name).alg
    assert check_associativity(alg, 4).ok
    assert check_nondegenerate(alg, 4).ok
    assert check_idempotent_algebra(alg, 4).ok


def test_tensor_square_product_and_flip():
    """[DERIVED] (a⊗b)(c⊗d) = ac⊗bd; σ is an involution."""
    C = matrix_units()
    sq = tensor_square(C)
    got = sq.product(((1, 2), (3, 1)), ((2, 2), (1, 4)))
    assert got == Element.basis(((1, 2), (3, 4)))
    x = Element({((1, 2), (3, 1)): 2})
    assert sq.flip(sq.flip(x)) == x
    assert check_nondegenerate(sq, 4).ok


small = st.dictionaries(st.sampled_from(range(4)), st.integers(-3, 3), max_size=4).map(Element)


@given(small, small, small)
def test_multiply_bilinear_and_associative(a, b, c):
    """[DERIVED] bilinear extension of the structure constants of M2."""
    A = m2()
    assert multiply(a + b, c, A) == multiply(a, c, A) + multiply(b, c, A)
    assert multiply(a, b + c, A) == multiply(a, b, A) + multiply(a, c, A)
    assert multiply(multiply(a, b, A), c, A) == multiply(a, multiply(b, c, A), A)


@given(st.integers(1, 6), st.integers(1, 6))
def test_local_units_of_matrix_units(i, j):
    """[DERIVED] Σ_{k≤n} e_kk fixes e_ij from both sides once n ≥ max(i, j)."""
    C = matrix_units()
    u = C.local_unit_for([(i, j)])
    x = C.e((i, j))
    assert multiply(u, x, C) == x == multiply(x, u, C)
