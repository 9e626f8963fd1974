"""Gallery constructions and the registry of named families."""
import pytest

from nucoprod.algebra import multiply
from nucoprod.element import Element
from nucoprod.errors import ParseError
from nucoprod.gallery.matrix import matrix_units
from nucoprod.gallery.registry import FAMILIES, build, family_names
from nucoprod.gallery.sandwich import e_adjoint_witness, qn_rule, triangular_rule
from nucoprod.scalar import T, parse_scalar


def test_family_names_are_stable():
    """[DERIVED] the CLI exposes these thirteen families in this order."""
    assert family_names() == [
        "group:Z", "group:S3", "group:F2", "monoid:N", "trivial-right-unit", "tensor-split",
        "matrix", "sandwich:ex4_3", "sandwich:ex3_32", "sandwich:ex4_4", "sandwich:qn",
        "sandwich:ex3_24", "sandwich:ex3_25"]
    assert set(FAMILIES) == set(family_names())


def test_build_rejects_bad_input():
    """[DERIVED] unknown families and parameters are parse errors."""
    with pytest.raises(ParseError):
        build("group:S4")
    with pytest.raises(ParseError):
        build("matrix", t="1")


def test_parameter_substitution():
    """[DERIVED] t given as text is parsed exactly."""
    entry = build("sandwich:ex3_24", t="1/2")
    assert entry.params["t"] == parse_scalar("1/2")
    q = entry.cp.E.q((1, 2))
    assert q == Element({(1, 1): 1, (1, 2): parse_scalar("1/2")})


@pytest.mark.parametrize("upper", [False, True])
def test_triangular_q_are_idempotent(upper):
    """[PAPER] q_ij = e_ii + t e_ij is idempotent at formal t."""
    C = matrix_units(upper)
    q = triangular_rule(T)
    for i in range(1, 5):
        for j in range(1, 5):
            if upper and j < i:
                continue
            assert multiply(q((i, j)), q((i, j)), C) == q((i, j))


def test_qn_are_idempotent():
    """[DERIVED] q_1 = e_11 and q_n = e_n1 + e_nn square to themselves."""
    C = matrix_units()
    for n in range(1, 7):
        assert multiply(qn_rule(n), qn_rule(n), C) == qn_rule(n)


def test_sandwich_idempotent(gallery):
    """[DERIVED] E·E = E and E absorbs Δ on truncated actions for ex3_32."""
    cp = gallery("sandwich:ex3_32").cp
    E = cp.idempotent
    labels = cp.square.enumerate(16)
    for z in labels:
        once = E.lmul(Element.basis(z))
        assert E.lmul(once) == once
    for a in cp.alg.enumerate(4):
        for z in labels:
            d = cp.delta(a).left.on_basis(z)
            assert E.lmul(d) == d


def test_ex3_25_idempotent_is_not_self_adjoint(gallery):
    """[DERIVED] E* ≠ E for ex3_25 since q_ij* = e_ii + t̄ e_ji."""
    assert e_adjoint_witness(gallery("sandwich:ex3_25").cp) == ((1, 1), (1, 2))


def test_expected_profiles_are_declared():
    """[DERIVED] every entry declares T1 and T3; ex4_4 leaves T2 and T4 open."""
    for name in family_names():
        declared = {k for k in build(name).expected if k.startswith("maps.")}
        assert {"maps.T1", "maps.T3"} <= declared, name
        assert len(declared) == (2 if name == "sandwich:ex4_4" else 4), name


def test_ex4_4_is_fully_regular(gallery):
    """[DERIVED] with q_j = p_j all four maps of ex4_4 land in A⊗A."""
    from nucoprod.coproduct import regularity_report
    assert set(regularity_report(gallery("sandwich:ex4_4").cp, 5).profile().values()) == {"regular"}


def test_qn_left_absorption_expansion(gallery):
    """[DERIVED] (e_rs⊗1)E = (e_r1+e_rs)⊗p_s, from e_rs(e_s1+e_ss) with q_1 = e_11."""
    E = gallery("sandwich:qn").cp.E
    for r in range(1, 5):
        assert E.y_one_times((r, 1)) == Element.basis(((r, 1), 1))
        for s in range(2, 5):
            assert E.y_one_times((r, s)) == Element({((r, 1), s): 1, ((r, s), s): 1})
