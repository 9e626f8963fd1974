"""The canonical maps T1..T4, their consistency with Δ's actions, and regularity sweeps."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..algebra import (one_tensor_left, one_tensor_right, tensor_one_left, tensor_one_right)
from ..element import Element
from ..errors import OracleInconsistent
from ..schemes import check_depth
from ..verdict import jsonable, render
from .core import Coproduct, Infinite, MapValue, _mul_sq

MAPS = (1, 2, 3, 4)

# Which canonical maps each coassociativity notion needs.
DEFINITIONS = {
    "T1T2": (1, 2),
    "T3T4": (3, 4),
    "T1T4": (1, 4),
    "T2T3": (2, 3),
    "single_T1": (1,),
}

DISPUTED = {"T2T3": "the T2/T3 form of coassociativity is unsettled; reported for information only"}

REGULAR = "regular"
NON_REGULAR = "non_regular"
UNKNOWN = "unknown_to_depth"


def act_left(cp: Coproduct, which: int, x, y, probe: Element) -> Element:
    """m·probe for m = T_which(x⊗y) computed only through Δ's actions."""
    alg = cp.alg
    if which == 1:      # Δ(x)(1⊗y)
        return cp.delta(x).lmul(one_tensor_left(alg, Element.basis(y), probe))
    if which == 2:      # (x⊗1)Δ(y)
        return tensor_one_left(alg, Element.basis(x), cp.delta(y).lmul(probe))
    if which == 3:      # (1⊗y)Δ(x)
        return one_tensor_left(alg, Element.basis(y), cp.delta(x).lmul(probe))
    if which == 4:      # Δ(y)(x⊗1)
        return cp.delta(y).lmul(tensor_one_left(alg, Element.basis(x), probe))
    raise ValueError(f"no canonical map T{which}")


def act_right(cp: Coproduct, which: int, x, y, probe: Element) -> Element:
    """probe·m for m = T_which(x⊗y)."""
    alg = cp.alg
    if which == 1:
        return one_tensor_right(alg, cp.delta(x).rmul(probe), Element.basis(y))
    if which == 2:
        return cp.delta(y).rmul(tensor_one_right(alg, probe, Element.basis(x)))
    if which == 3:
        return cp.delta(x).rmul(one_tensor_right(alg, probe, Element.basis(y)))
    if which == 4:
        return tensor_one_right(alg, cp.delta(y).rmul(probe), Element.basis(x))
    raise ValueError(f"no canonical map T{which}")


def _probes(cp: Coproduct, value: Element, x, y):
    alg = cp.alg
    seen = {}
    for k in value:
        seen[k] = Element.basis(k)
    base = alg.basis() if alg.finite and alg.dimension <= 6 else alg.enumerate(3)
    for u in base:
        for v in base:
            seen.setdefault((u, v), Element.basis((u, v)))
    labels = set()
    for k in value:
        labels.update(k)
    labels.update((x, y))
    unit = alg.local_unit_for(labels)
    if unit is not None and len(unit) <= 12:
        from ..element import pair
        seen[("unit",)] = pair(unit, unit)
    return list(seen.values())


def _check_finite(cp, which, x, y, value: Element):
    for probe in _probes(cp, value, x, y):
        if _mul_sq(cp.alg, value, probe) != act_left(cp, which, x, y, probe):
            raise OracleInconsistent(
                f"T{which}({render(x)}⊗{render(y)}) = {value.render()} disagrees with Δ's left action "
                f"on {probe.render()}")
        if _mul_sq(cp.alg, probe, value) != act_right(cp, which, x, y, probe):
            raise OracleInconsistent(
                f"T{which}({render(x)}⊗{render(y)}) = {value.render()} disagrees with Δ's right action "
                f"on {probe.render()}")


def check_infinite(cp: Coproduct, which: int, x, y, value: Infinite, count: int) -> list:
    """Confirm ``count`` probes of an Infinite value; returns the separating labels."""
    if value.probe is None:
        raise OracleInconsistent(f"T{which}({render(x)}⊗{render(y)}) is declared infinite without a probe")
    seen = []
    for n in range(count):
        y_n, w_n = value.probe(n)
        out = act_left(cp, which, x, y, y_n)
        if not out.coeff(w_n):
            raise OracleInconsistent(
                f"T{which}({render(x)}⊗{render(y)}): probe {n} gives no {render(w_n)} term in m·{y_n.render()}")
        if w_n in seen:
            raise OracleInconsistent(f"T{which}({render(x)}⊗{render(y)}): probe labels repeat at {n}")
        seen.append(w_n)
    return seen


def canonical_map(which: int, x, y, cp: Coproduct, cross_check: bool = True,
                  probes: int = 3) -> MapValue:
    """T_which applied to e_x⊗e_y, checked against the multiplier actions of Δ."""
    if which not in MAPS:
        raise ValueError(f"no canonical map T{which}")
    value = cp.oracle(which)(x, y)
    if cross_check:
        if isinstance(value, Element):
            _check_finite(cp, which, x, y, value)
        else:
            check_infinite(cp, which, x, y, value, probes)
    return value


@dataclass
class MapStatus:
    which: int
    status: str
    depth: int
    witness: Optional[tuple] = None
    description: str = ""
    separating: list = field(default_factory=list)

    @property
    def regular(self) -> bool:
        return self.status == REGULAR

    def to_json(self):
        out = {"status": self.status, "depth": self.depth,
               "witness": jsonable(self.witness)}
        if self.witness is not None:
            out["witness_text"] = render(self.witness)
        if self.description:
            out["family"] = self.description
        return out


@dataclass
class RegularityReport:
    coproduct: str
    depth: int
    maps: dict
    applicable: dict
    verdicts: dict = field(default_factory=dict)

    def status(self, which: int) -> str:
        return self.maps[which].status

    def regular(self, *which) -> bool:
        return all(self.maps[w].regular for w in which)

    def profile(self) -> dict:
        return {f"T{w}": self.maps[w].status for w in MAPS}

    def to_json(self):
        out = {"maps": {f"T{w}": self.maps[w].to_json() for w in MAPS},
               "applicable": dict(self.applicable)}
        if self.verdicts:
            out["coassociativity"] = {k: v.to_json() for k, v in self.verdicts.items()}
        return out


def map_status(cp: Coproduct, which: int, depth: int) -> MapStatus:
    """Classify T_which on all pairs of the first ``depth`` basis labels (cached)."""
    check_depth(depth)
    cache = cp.__dict__.setdefault("_map_status", {})
    key = (which, depth)
    if key in cache:
        return cache[key]
    alg = cp.alg
    labels = alg.basis() if alg.finite else alg.enumerate(depth)
    result = None
    for x in labels:
        for y in labels:
            value = canonical_map(which, x, y, cp, probes=depth)
            if isinstance(value, Infinite):
                sep = check_infinite(cp, which, x, y, value, depth)
                result = MapStatus(which, NON_REGULAR, depth, (x, y), value.description, sep)
                break
        if result is not None:
            break
    if result is None:
        result = MapStatus(which, REGULAR, depth)
    cache[key] = result
    return result


def regularity_report(cp: Coproduct, depth: int, with_verdicts: bool = False) -> RegularityReport:
    check_depth(depth)
    maps = {w: map_status(cp, w, depth) for w in MAPS}
    applicable = {}
    for name, needed in DEFINITIONS.items():
        applicable[name] = all(maps[w].regular for w in needed)
    if applicable["single_T1"]:
        from .coassoc import check_homomorphism
        applicable["single_T1"] = check_homomorphism(cp, depth).ok
    report = RegularityReport(cp.name, depth, maps, applicable)
    if with_verdicts:
        from .coassoc import run_all
        report.verdicts = run_all(cp, depth)
    return report
