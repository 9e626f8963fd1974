"""Slices, dual spaces, dual products and the pairing actions."""
import random

import pytest

from nucoprod import dual as D
from nucoprod.algebra import Functional
from nucoprod.coproduct import slice_delta, slice_element
from nucoprod.coproduct.slices import ELEMENT, INFINITE, UNKNOWN
from nucoprod.element import Element
from nucoprod.gallery.matrix import banded_functional, column_functional, row_functional
from nucoprod.gallery.trivial import unital_right_unit
from nucoprod.verdict import Status


def test_matrix_coordinate_slices(matrix_cp):
    """[DERIVED] (f_rs⊗ι)Δ(e_pq) = δ(p,r) e_sq and (ι⊗f_rs)Δ(e_pq) = δ(s,q) e_pr."""
    for r, s in [(2, 3), (1, 1), (4, 2)]:
        f = Functional.coordinate((r, s))
        for p in range(1, 5):
            for q in range(1, 5):
                left = slice_delta(matrix_cp, "left", f, (p, q))
                right = slice_delta(matrix_cp, "right", f, (p, q))
                assert left.value == (Element.basis((s, q)) if p == r else Element.zero())
                assert right.value == (Element.basis((p, r)) if s == q else Element.zero())
                assert left.exact and right.exact


def test_counit_slices_are_identity(matrix_cp):
    """[DERIVED] (ε⊗ι)Δ(a) = a = (ι⊗ε)Δ(a) on matrix units."""
    for k in matrix_cp.alg.enumerate(9):
        assert slice_delta(matrix_cp, "left", matrix_cp.counit, k).value == Element.basis(k)
        assert slice_delta(matrix_cp, "right", matrix_cp.counit, k).value == Element.basis(k)


def test_infinite_row_leaves_a(matrix_cp):
    """[DERIVED] a whole row has an infinite left slice and a finite right one."""
    w = row_functional(1)
    assert slice_delta(matrix_cp, "left", w, (1, 2)).status == INFINITE
    assert slice_delta(matrix_cp, "right", w, (1, 2)).status == ELEMENT


def test_unbounded_functional_without_hint_is_unknown(matrix_cp):
    """[DERIVED] a rule with no support data that never stops is reported unknown."""
    w = Functional(lambda k: 1, None, "all")
    assert slice_delta(matrix_cp, "left", w, (1, 1), window=8).status == UNKNOWN


def test_slice_of_group_element(f2):
    """[DERIVED] (δ_x⊗ι)Δ(δ_p) = δ_(x⁻¹p) in the free group."""
    g = f2.group
    for x in f2.alg.enumerate(9):
        for p in f2.alg.enumerate(5):
            s = slice_delta(f2, "left", Functional.coordinate(x), p)
            assert s.value == Element.basis(g.mul(g.inv(x), p))
    x = Element({(1,): 2, (2, 1): -1})
    assert slice_element(f2, "right", Functional.coordinate(()), x).value == x


@pytest.mark.parametrize("space, row, eps", [
    ("B0", "fails", "fails"), ("B0l", "ok", "fails"), ("Bl", "fails", "ok"),
    ("Br", "ok", "ok"), ("B", "fails", "ok"),
])
def test_matrix_memberships(matrix_cp, space, row, eps):
    """[DERIVED] a row lies in B0l and Br only; ε lies in B but in neither reduced tier."""
    def tag(v):
        return "ok" if v.ok else v.status.value
    assert tag(D.membership(row_functional(1), space, matrix_cp, 4)) == row
    assert tag(D.membership(matrix_cp.counit, space, matrix_cp, 4)) == eps


def test_matrix_dual_product_table(matrix_cp):
    """[DERIVED] f_rs·f_r′s′ = δ(s,r′) f_rs′ under both conventions."""
    labels = matrix_cp.alg.enumerate(9)
    for a in labels[:6]:
        for b in labels[:6]:
            for conv in ("left", "right"):
                p = D.dual_product(Functional.coordinate(a), Functional.coordinate(b), conv, matrix_cp)
                want = {(a[0], b[1]): 1} if a[1] == b[0] else {}
                assert {k: p.at(k) for k in labels if p.at(k)} == want


def test_banded_products_agree(matrix_cp):
    """[DERIVED] left and right conventions agree on seeded banded functionals."""
    rng = random.Random(3)
    ws = [D.DualElement(f) for f in matrix_cp.dual_samples(rng, 5)]
    assert D.check_products_agree(matrix_cp, 5, samples=ws).ok


def test_degenerate_dual_of_unital_right_unit():
    """[PAPER] for Δ(a) = a⊗1 on ℚ² the dual product is (ω1ω2)(a) = ω1(a)ω2(1), hence degenerate."""
    cp = unital_right_unit()
    v = D.check_dual_algebra_laws(cp, "B", 2)["nondegeneracy"]
    assert v.fails
    assert v.witness == Element({0: -1, 1: 1})
    w1, w2 = Functional.coordinate(0), Functional.from_values({0: 2, 1: 5})
    p = D.dual_product(w1, w2, "left", cp)
    assert [p.at(k) for k in (0, 1)] == [7, 0]


def test_ex4_3_dual_is_degenerate(gallery):
    """[PAPER] the dual product of ex4_3 kills a nonzero functional."""
    v = D.check_dual_algebra_laws(gallery("sandwich:ex4_3").cp, "B", 5)["nondegeneracy"]
    assert v.fails and v.witness == Element.basis(((1, 1), (1, 2)))


def test_finite_dual_of_s3(s3):
    """[DERIVED] K(S3)′ is the 6-dimensional group algebra with unit ε."""
    v = D.check_finite_dual(s3)
    assert v.status is Status.HOLDS
    assert v.evidence == {"dimension": 6, "unit": "ε"}
    table = D.finite_dual_table(s3)
    g = s3.group
    for p in s3.alg.basis():
        for q in s3.alg.basis():
            assert table[(p, q)] == Element.basis(g.mul(p, q))


def test_pairing_laws(f2, s3):
    """[DERIVED] module laws, unitality and faithfulness on free-group and S3 samples."""
    for cp, depth in ((f2, 4), (s3, 6)):
        for key, v in D.check_pairing_laws(cp, depth).items():
            assert v.ok, (cp.name, key, v)


def test_pairing_actions_closed_form(matrix_cp):
    """[DERIVED] f_rs▷e_pq = δ(s,q) e_pr and e_pq◁f_rs = δ(p,r) e_sq."""
    P = D.pairing_actions(matrix_cp)
    f = Functional.coordinate((2, 3))
    assert P.act(f, Element.basis((1, 3))) == Element.basis((1, 2))
    assert P.act_right(Element.basis((2, 4)), f) == Element.basis((3, 4))
    b = P.functional_times(f, Element.basis((2, 2)))
    assert b.at((2, 3)) == 1 and b.at((1, 3)) == 0


def test_multiplier_tiers(matrix_cp):
    """[DERIVED] M(B0) = B; reduced left tier pairs with Br while a whole row lies outside Bl."""
    assert D.dual_multiplier_check(matrix_cp, 5, "B0", "B").ok
    assert D.dual_multiplier_check(matrix_cp, 5, "B0l", "Br").ok
    assert D.dual_multiplier_check(matrix_cp, 5, "B0r", "Bl").ok
    v = D.dual_multiplier_check(matrix_cp, 5, "B0l", "Bl")
    assert v.fails and v.witness == "row1"


def test_sampling_is_seeded(matrix_cp):
    """[DERIVED] identical seeds give identical samples."""
    a = [w.name for w in D.sample_functionals(matrix_cp, 4, seed=9)]
    b = [w.name for w in D.sample_functionals(matrix_cp, 4, seed=9)]
    assert a == b
    x = D.sample_functionals(matrix_cp, 4, 9)[-1]
    y = D.sample_functionals(matrix_cp, 4, 9)[-1]
    assert all(x.at(k) == y.at(k) for k in matrix_cp.alg.enumerate(16))
