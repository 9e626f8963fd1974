"""The analysis pipeline behind the command line: run sections, compare expectations, render."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from . import dual
from .algebra import check_idempotent_algebra, check_nondegenerate
from .coproduct import coassoc, structure
from .coproduct.canonical import MAPS, map_status, regularity_report
from .coproduct.core import Coproduct
from .schemes import check_depth
from .verdict import Status, Verdict, jsonable, precondition

SCHEMA_VERSION = 1

SECTIONS = ("regularity", "coassociativity", "counit", "fullness", "nondegeneracy", "dual", "pairing")

# Keys present in every report, run or not.
SECTION_KEYS = {
    "regularity": ("T1", "T2", "T3", "T4", "homomorphism", "involution", "idempotent_algebra"),
    "coassociativity": ("T1T2", "T3T4", "T1T4", "T2T3", "single_T1", "extension"),
    "counit": ("homomorphism", "T1T2", "T3T4", "solved"),
    "fullness": ("left_leg", "right_leg"),
    "nondegeneracy": ("algebra", "coproduct", "weak", "extension_unit", "surjective_T1", "surjective_T2"),
    "dual": ("counit_in_B", "counit_in_B0", "strong_T1T2", "strong_T3T4", "products_agree",
             "associativity", "closure", "unit", "nondegeneracy",
             "multipliers_B0", "multipliers_B0l", "multipliers_B0r", "finite_dual"),
    "pairing": ("right_module", "left_module", "unital_left", "unital_right", "faithful"),
}

_OK = {Status.HOLDS.value, Status.VERIFIED_TO_DEPTH.value, "regular"}


@dataclass
class AnalysisConfig:
    family: Optional[str] = None
    params: dict = field(default_factory=dict)
    spec: Optional[str] = None
    depth: int = 6
    seed: int = 0
    sections: tuple = SECTIONS
    format: str = "text"


# -- sections ------------------------------------------------------------------------------

def _skip(section, reason):
    v = precondition(reason).to_json()
    return {key: dict(v) for key in SECTION_KEYS[section]}


def _regularity(cp, depth):
    report = regularity_report(cp, depth)
    out = {f"T{w}": report.maps[w].to_json() for w in MAPS}
    out["homomorphism"] = coassoc.check_homomorphism(cp, depth)
    out["involution"] = coassoc.check_involution(cp, depth)
    out["idempotent_algebra"] = check_idempotent_algebra(cp.alg, depth)
    return out


def _coassociativity(cp, depth):
    out = coassoc.run_all(cp, depth)
    out["extension"] = structure.check_coassoc_extension(cp, depth)
    return out


def _solved(cp, depth):
    for variant in ("T1T2", "T3T4", "T1", "T3", "T2", "T4"):
        if all(map_status(cp, w, depth).regular for w in structure.COUNIT_VARIANTS[variant]):
            result = structure.solve_counit(cp, variant, depth)
            body = result.to_json()
            if isinstance(result, structure.NoSolution):
                return dict(body, status=Status.FAILS.value, witness=body["certificate"],
                            detail="the counit laws have no common solution")
            status = Status.HOLDS if result.exact else Status.VERIFIED_TO_DEPTH
            return dict(body, status=status.value, witness=None)
    return precondition("no canonical map is regular", depth)


def _counit(cp, depth):
    eps = cp.counit
    if eps is None:
        none = precondition("no counit supplied", depth)
        return {"homomorphism": none, "T1T2": none, "T3T4": none, "solved": _solved(cp, depth)}
    return {
        "homomorphism": structure.check_counit_homomorphism(cp, eps, depth),
        "T1T2": structure.check_counit(cp, eps, "T1T2", depth),
        "T3T4": structure.check_counit(cp, eps, "T3T4", depth),
        "solved": _solved(cp, depth),
    }


def _fullness(cp, depth):
    rep = structure.check_fullness(cp, depth).to_json()
    return {"left_leg": rep["left_leg"], "right_leg": rep["right_leg"]}


def _nondegeneracy(cp, depth):
    nd = structure.check_nondegenerate_coproduct(cp, depth)
    E = cp.idempotent
    weak = (structure.check_weak_nondegeneracy(cp, E, depth) if E is not None
            else precondition("no idempotent supplied", depth))
    if nd.ok:
        unit = structure.check_extension_unit(cp, depth)
    elif weak.ok:
        unit = structure.check_extension_unit(cp, depth, E)
    else:
        unit = precondition("Δ is neither non-degenerate nor weakly non-degenerate", depth)
    return {
        "algebra": check_nondegenerate(cp.alg, depth),
        "coproduct": nd,
        "weak": weak,
        "extension_unit": unit,
        "surjective_T1": structure.check_surjective(cp, 1, depth),
        "surjective_T2": structure.check_surjective(cp, 2, depth),
    }


def _dual(cp, depth, seed):
    out = {}
    eps = cp.counit
    if eps is None:
        out["counit_in_B"] = out["counit_in_B0"] = precondition("no counit supplied", depth)
    else:
        w = dual.DualElement(eps)
        out["counit_in_B"] = dual.membership(w, "B", cp, depth)
        out["counit_in_B0"] = dual.membership(w, "B0", cp, depth)
    out["strong_T1T2"] = dual.check_strong_coassociativity(cp, depth, "T1T2", seed=seed)
    out["strong_T3T4"] = dual.check_strong_coassociativity(cp, depth, "T3T4", seed=seed)
    out["products_agree"] = dual.check_products_agree(cp, depth, seed=seed)
    out.update(dual.check_dual_algebra_laws(cp, "B", depth, seed=seed))
    for tier, claimed in (("B0", "B"), ("B0l", "Br"), ("B0r", "Bl")):
        out[f"multipliers_{tier}"] = dual.dual_multiplier_check(cp, min(depth, 5), tier, claimed, seed=seed)
    out["finite_dual"] = dual.check_finite_dual(cp)
    return out


def _pairing(cp, depth, seed):
    return dual.check_pairing_laws(cp, depth, seed=seed)


_RUNNERS = {
    "regularity": lambda cp, d, s: _regularity(cp, d),
    "coassociativity": lambda cp, d, s: _coassociativity(cp, d),
    "counit": lambda cp, d, s: _counit(cp, d),
    "fullness": lambda cp, d, s: _fullness(cp, d),
    "nondegeneracy": lambda cp, d, s: _nondegeneracy(cp, d),
    "dual": _dual,
    "pairing": _pairing,
}


# -- assembly -------------------------------------------------------------------------------

def _as_json(v):
    return v.to_json() if isinstance(v, Verdict) else jsonable(v)


def _status_of(report, path):
    section, _, key = path.partition(".")
    if section == "maps":
        section, key = "regularity", key
    node = report["sections"].get(section)
    if node is None:
        return None
    if not key:
        statuses = [node[k]["status"] for k in SECTION_KEYS[section]]
        if any(s == Status.FAILS.value for s in statuses):
            return Status.FAILS.value
        if all(s in _OK for s in statuses):
            return Status.HOLDS.value
        return statuses[0] if len(set(statuses)) == 1 else Status.UNKNOWN_TO_DEPTH.value
    return node.get(key, {}).get("status")


def _matches(expected, actual):
    if expected == "ok":
        return actual in _OK
    if expected == "fails":
        return actual == Status.FAILS.value
    return expected == actual


def compare_expectations(report: dict, expected: dict, ran: set) -> dict:
    out = {}
    for path in sorted(expected):
        section = path.split(".")[0]
        section = "regularity" if section == "maps" else section
        if section not in ran:
            out[path] = {"expected": expected[path], "actual": None, "matched": None}
            continue
        actual = _status_of(report, path)
        out[path] = {"expected": expected[path], "actual": actual, "matched": _matches(expected[path], actual)}
    return out


def analyse(cp: Coproduct, depth: int = 6, seed: int = 0, sections=SECTIONS,
            expected: Optional[dict] = None, source: Optional[dict] = None,
            notes: Optional[dict] = None, gates: Optional[dict] = None) -> dict:
    """Run the requested sections in dependency order and assemble the report document."""
    check_depth(depth)
    unknown_sections = [s for s in sections if s not in SECTIONS]
    if unknown_sections:
        raise ValueError(f"unknown sections: {', '.join(unknown_sections)}")
    ran = set(sections)
    body = {}
    for name in SECTIONS:
        if name in ran:
            result = _RUNNERS[name](cp, depth, seed)
            body[name] = {k: _as_json(result[k]) for k in SECTION_KEYS[name]}
        else:
            body[name] = _skip(name, "section not requested")
    report = {
        "schema_version": SCHEMA_VERSION,
        "source": source or {"kind": "object", "name": cp.name},
        "algebra": cp.alg.name,
        "coproduct": cp.name,
        "depth": depth,
        "seed": seed,
        "sections_run": [s for s in SECTIONS if s in ran],
        "sections": body,
    }
    if gates:
        report["gates"] = {k: _as_json(v) for k, v in sorted(gates.items())}
    if notes:
        report["notes"] = dict(sorted(notes.items()))
    cmp = compare_expectations(report, expected or {}, ran)
    mismatches = [p for p, r in cmp.items() if r["matched"] is False]
    report["expectations"] = cmp
    report["summary"] = {"expectations_checked": sum(r["matched"] is not None for r in cmp.values()),
                         "mismatches": mismatches,
                         "exit_code": 2 if mismatches else 0}
    return report


def to_json_text(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _line(v: dict) -> str:
    text = v["status"]
    if v.get("depth") is not None:
        text += f" (depth {v['depth']})"
    if v.get("witness") is not None:
        text += f"  witness: {v.get('witness_text') or _flat(v['witness'])}"
    if v.get("detail"):
        text += f"  [{v['detail']}]"
    return text


def _flat(x) -> str:
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(_flat(y) for y in x) + ")"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{k}: {_flat(v)}" for k, v in x.items()) + "}"
    return str(x)


def to_text(report: dict) -> str:
    lines = [f"{report['coproduct']} on {report['algebra']}  depth {report['depth']}  seed {report['seed']}"]
    for name in SECTIONS:
        run = name in report["sections_run"]
        lines.append("")
        lines.append(f"[{name}]" + ("" if run else " skipped"))
        if not run:
            continue
        for key in SECTION_KEYS[name]:
            lines.append(f"  {key:<20} {_line(report['sections'][name][key])}")
    if report.get("notes"):
        lines.append("")
        lines.append("[notes]")
        for k, v in report["notes"].items():
            lines.append(f"  {k}: {v}")
    if report["expectations"]:
        lines.append("")
        lines.append("[expectations]")
        for path, r in report["expectations"].items():
            mark = {True: "match", False: "MISMATCH", None: "not run"}[r["matched"]]
            lines.append(f"  {path:<28} expected {r['expected']:<12} got {r['actual']}  {mark}")
    s = report["summary"]
    lines.append("")
    lines.append(f"expectations checked: {s['expectations_checked']}, mismatches: {len(s['mismatches'])}")
    return "\n".join(lines) + "\n"
