"""Counits, fullness, non-degeneracy and the extension to multipliers."""
import pytest

from nucoprod.algebra import Functional
from nucoprod.coproduct import (NoSolution, SolvedCounit, check_counit, check_counit_homomorphism,
                                check_extension_unit, check_fullness, check_nondegenerate_coproduct,
                                check_surjective, check_weak_nondegeneracy, extend_to_M, solve_counit)
from nucoprod.coproduct.structure import check_coassoc_extension
from nucoprod.element import Element
from nucoprod.multiplier import identity
from nucoprod.verdict import Status


def test_group_counit_is_evaluation_at_the_unit(s3, zgroup):
    """[DERIVED] the solved counit of K(G) is δ_e ↦ 1 with no free values."""
    for cp in (s3, zgroup):
        sol = solve_counit(cp, "T1T2", 4)
        assert isinstance(sol, SolvedCounit) and sol.free_dimension == 0
        labels = cp.alg.enumerate(4) if not cp.alg.finite else cp.alg.basis()
        assert {k: sol.at(k) for k in labels} == {k: int(k == cp.group.unit) for k in labels}
        assert check_counit(cp, cp.counit, "T1T2", 6).ok
        assert check_counit_homomorphism(cp, cp.counit, 6).ok


def test_monoid_counit_values(gallery):
    """[DERIVED] on (N, +) the counit is δ_0 ↦ 1."""
    sol = solve_counit(gallery("monoid:N").cp, "T1T2", 4)
    assert sol.values == {0: 1, 1: 0, 2: 0, 3: 0}


def test_matrix_counit(matrix_cp):
    """[PAPER] ε(e_pq) = δ(p,q) satisfies the T3/T4 laws and is not multiplicative."""
    eps = matrix_cp.counit
    assert check_counit(matrix_cp, eps, "T3T4", 6).ok
    assert check_counit(matrix_cp, eps, "T1T2", 6).status is Status.PRECONDITION_NOT_MET
    v = check_counit_homomorphism(matrix_cp, eps, 6)
    assert v.fails and v.witness == ((1, 1), (2, 2))
    sol = solve_counit(matrix_cp, "T3T4", 4)
    assert all(sol.at(k) == eps.at(k) for k in matrix_cp.alg.enumerate(4))


def test_wrong_counit_is_rejected(s3):
    """[DERIVED] the zero functional violates the counit laws."""
    assert check_counit(s3, Functional.zero(), "T1T2", 6).fails


def test_right_unit_coproduct_has_no_counit(gallery):
    """[PAPER] for Δ(a) = a⊗1 the counit laws clash; the certificate names the clash."""
    sol = solve_counit(gallery("trivial-right-unit").cp, "T1", 6)
    assert isinstance(sol, NoSolution)
    assert sol.certificate == [(1, 0, 0, 0), (1, 0, 1, 1)]


def test_fullness(s3, gallery):
    """[DERIVED] group Δ is full exactly; ex4_3 misses e11⊗e21 in its legs."""
    assert check_fullness(s3, 6).full.status is Status.HOLDS
    rep = check_fullness(gallery("sandwich:ex4_3").cp, 5)
    assert rep.full.fails
    assert rep.full.witness == Element.basis(((1, 1), (2, 1)))
    assert check_fullness(gallery("sandwich:ex3_24").cp, 4).full.ok


def test_nondegeneracy(s3, gallery):
    """[DERIVED] group Δ is non-degenerate; ex3_32 only weakly."""
    assert check_nondegenerate_coproduct(s3, 6).status is Status.HOLDS
    cp = gallery("sandwich:ex3_32").cp
    assert check_nondegenerate_coproduct(cp, 4).fails
    assert check_weak_nondegeneracy(cp, cp.idempotent, 6).ok


def test_surjectivity(s3, gallery):
    """[DERIVED] T1, T2 of S3 are onto by rank 36; T1 of ex3_32 is not."""
    for w in (1, 2):
        v = check_surjective(s3, w, 6)
        assert v.status is Status.HOLDS and v.evidence["rank"] == 36
    assert check_surjective(gallery("sandwich:ex3_32").cp, 1, 4).fails


def test_extension_of_the_unit(s3, gallery):
    """[DERIVED] Δ₁(1) = 1⊗1 for S3 and = E for ex3_32 on all basis actions."""
    assert check_extension_unit(s3, 1).ok
    one = extend_to_M(s3, identity(s3.alg), depth=1)
    z = (s3.alg.basis()[0], s3.alg.basis()[3])
    assert one.left.on_basis(z) == Element.basis(z)
    cp = gallery("sandwich:ex3_32").cp
    assert check_extension_unit(cp, 3, cp.idempotent).ok


def test_extension_coassociativity(gallery):
    """[DERIVED] (Δ⊗ι)Δ = (ι⊗Δ)Δ on actions for the split and ex3_32 coproducts."""
    assert check_coassoc_extension(gallery("tensor-split").cp, 4).ok
    v = check_coassoc_extension(gallery("sandwich:ex3_32").cp, 4)
    assert v.ok and v.evidence["idempotent"] == "E"


def test_extension_is_gated_on_homomorphism(matrix_cp):
    """[DERIVED] the matrix Δ is not multiplicative, so the extension is not attempted."""
    assert check_coassoc_extension(matrix_cp, 4).status is Status.PRECONDITION_NOT_MET
