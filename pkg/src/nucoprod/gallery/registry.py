"""Named gallery entries: the built coproduct together with its expected profile."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..coproduct.core import Coproduct
from ..errors import ParseError
from ..scalar import T, parse_scalar
from . import groups, matrix, sandwich, trivial

OK = "ok"
FAILS = "fails"
REGULAR = "regular"
NON_REGULAR = "non_regular"


@dataclass
class GalleryEntry:
    """A gallery family built with concrete parameters.

    ``expected`` maps report paths such as ``"maps.T1"`` or ``"fullness"`` to
    ``regular``/``non_regular`` (canonical maps) or ``ok``/``fails`` (verdicts).
    """

    name: str
    params: dict
    cp: Coproduct
    expected: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    @property
    def alg(self):
        return self.cp.alg


def _maps(*regular, non_regular=()):
    out = {f"maps.T{w}": REGULAR for w in regular}
    out.update({f"maps.T{w}": NON_REGULAR for w in non_regular})
    return out


_GROUP = {
    **_maps(1, 2, 3, 4),
    "regularity.homomorphism": OK,
    "coassociativity.T1T2": OK,
    "coassociativity.T3T4": OK,
    "coassociativity.single_T1": OK,
    "coassociativity.extension": OK,
    "counit.homomorphism": OK,
    "counit.T1T2": OK,
    "counit.T3T4": OK,
    "fullness": OK,
    "nondegeneracy.coproduct": OK,
    "dual.associativity": OK,
    "dual.nondegeneracy": OK,
    "pairing.right_module": OK,
    "pairing.left_module": OK,
}


def _group(name):
    def build(params):
        return groups.group_coproduct(name), dict(_GROUP), {}
    return build


def _monoid(params):
    return groups.monoid_coproduct(), {**_maps(1, 2, 3, 4), "counit.T1T2": OK}, {}


def _trivial(params):
    expected = {
        **_maps(1, 3, non_regular=(2, 4)),
        "coassociativity.single_T1": OK,
        "counit.solved": FAILS,
        "nondegeneracy.coproduct": OK,
    }
    return trivial.trivial_right_unit(), expected, {}


def _split(params):
    expected = {**_maps(non_regular=(1, 2, 3, 4)), "coassociativity.extension": OK,
                "nondegeneracy.coproduct": OK}
    return trivial.tensor_split(), expected, {}


def _matrix(params):
    expected = {
        **_maps(3, 4, non_regular=(1, 2)),
        "counit.T3T4": OK,
        "counit.homomorphism": FAILS,
        "coassociativity.T3T4": OK,
        "dual.strong_T3T4": OK,
        "dual.products_agree": OK,
        "dual.multipliers_B0": OK,
    }
    notes = {"counit": "ε(e_pq) = δ(p,q) satisfies the T3/T4 counit laws but is not a homomorphism"}
    return matrix.matrix_coproduct(), expected, notes


def _ex4_3(params):
    expected = {**_maps(3, 4, non_regular=(1, 2)), "coassociativity.T3T4": OK,
                "fullness": FAILS, "dual.nondegeneracy": FAILS}
    return sandwich.ex4_3(), expected, {}


def _ex3_32(params):
    expected = {**_maps(1, 2, 3, 4), "regularity.homomorphism": OK,
                "nondegeneracy.weak": OK, "coassociativity.extension": OK,
                "coassociativity.T1T2": OK, "coassociativity.T3T4": OK}
    return sandwich.ex3_32(), expected, {}


def _ex4_4(params):
    expected = {**_maps(1, 3), "regularity.homomorphism": OK, "coassociativity.single_T1": OK}
    return sandwich.ex4_4(), expected, {}


def _qn(params):
    notes = {"(e_rs⊗1)E": "(e_r1+e_rs)⊗p_s by direct expansion; the form (e_r1+e_ss)⊗p_s does not match it"}
    return sandwich.qn_mixed(), _maps(1, 2, 3, non_regular=(4,)), notes


def _triangular(builder, involution):
    def build(params):
        expected = {**_maps(1, 3, non_regular=(2, 4)), "regularity.homomorphism": OK, "fullness": OK}
        if involution:
            expected["regularity.involution"] = OK
        return builder(params.get("t", T)), expected, {}
    return build


FAMILIES: dict = {
    "group:Z": _group("Z"),
    "group:S3": _group("S3"),
    "group:F2": _group("F2"),
    "monoid:N": _monoid,
    "trivial-right-unit": _trivial,
    "tensor-split": _split,
    "matrix": _matrix,
    "sandwich:ex4_3": _ex4_3,
    "sandwich:ex3_32": _ex3_32,
    "sandwich:ex4_4": _ex4_4,
    "sandwich:qn": _qn,
    "sandwich:ex3_24": _triangular(sandwich.ex3_24, involution=False),
    "sandwich:ex3_25": _triangular(sandwich.ex3_25, involution=True),
}

PARAMETERS = {"sandwich:ex3_24": ("t",), "sandwich:ex3_25": ("t",)}


def family_names() -> list:
    return list(FAMILIES)


def build(name: str, **params) -> GalleryEntry:
    """Build a gallery entry; ``t`` may be a scalar or a string such as ``"1/2"``."""
    if name not in FAMILIES:
        raise ParseError(f"unknown gallery family {name!r}; known: {', '.join(FAMILIES)}")
    allowed = PARAMETERS.get(name, ())
    for key in params:
        if key not in allowed:
            raise ParseError(f"family {name} takes no parameter {key!r}")
    if "t" in params and isinstance(params["t"], str):
        params["t"] = parse_scalar(params["t"])
    builder: Callable = FAMILIES[name]
    cp, expected, notes = builder(params)
    return GalleryEntry(name, params, cp, expected, notes)
