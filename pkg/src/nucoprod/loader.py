"""Loading algebra and coproduct specifications from structured text.

Two forms are accepted.  A gallery reference, either as JSON
``{"gallery": "sandwich:ex3_24", "parameters": {"t": "1/2"}}`` or as the line
``gallery: sandwich:ex3_24 { t = 1/2 }``.  Or an explicit finite-dimensional
specification in JSON::

    {
      "name": "Q^2",
      "dimension": 2,
      "structure_constants": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
      "coproduct": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
      "counit": ["1", "1"],
      "maps": {"T1": [[0, 0, 0, 0, "1"]]}
    }

``structure_constants`` entries ``[i, j, k, s]`` mean e_i·e_j contains s·e_k;
``coproduct`` entries ``[a, i, j, s]`` mean Δ(e_a) contains s·e_i⊗e_j.  The
optional ``maps`` tables list ``[x, y, i, j, s]`` with T(e_x⊗e_y) containing
s·e_i⊗e_j; every pair not listed must map to zero.  Each table is checked
against the maps computed from Δ.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Optional

from .algebra import AlgebraSpec, Functional, check_associativity, check_nondegenerate, finite_algebra
from .coproduct.core import Coproduct, TensorValuedCoproduct
from .element import Element, add_term
from .errors import GateFailed, ParseError
from .scalar import parse_scalar
from .verdict import fails, verified

_GALLERY_LINE = re.compile(r"\s*gallery\s*:\s*([\w:\-]+)\s*(?:\{(.*)\})?\s*$", re.S)


@dataclass
class LoadedSpec:
    """A parsed specification: a gallery reference, or an algebra with an optional coproduct."""
    gallery: Optional[str] = None
    parameters: dict = field(default_factory=dict)
    alg: Optional[AlgebraSpec] = None
    cp: Optional[Coproduct] = None
    gates: dict = field(default_factory=dict)


def load_spec_file(path) -> LoadedSpec:
    with open(path, encoding="utf-8") as fh:
        return load_spec_text(fh.read())


def load_spec_text(text: str) -> LoadedSpec:
    m = _GALLERY_LINE.match(text)
    if m and not text.lstrip().startswith("{"):
        return LoadedSpec(gallery=m.group(1), parameters=_parse_params(m.group(2) or "", text))
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON: {err.msg}", err.lineno, err.colno) from None
    if not isinstance(data, dict):
        raise ParseError("specification must be a JSON object", 1, 1)
    if "gallery" in data:
        params = data.get("parameters", {})
        if not isinstance(params, dict):
            raise ParseError("'parameters' must be an object", *_locate(text, "parameters"))
        return LoadedSpec(gallery=str(data["gallery"]), parameters={k: str(v) for k, v in params.items()})
    return _finite_spec(data, text)


def _parse_params(body: str, text: str) -> dict:
    out = {}
    for part in filter(None, (p.strip() for p in re.split(r"[,;\n]", body))):
        if "=" not in part:
            line, col = _locate(text, part)
            raise ParseError(f"parameter {part!r} is not of the form key = value", line, col)
        key, value = (s.strip() for s in part.split("=", 1))
        out[key] = value
    return out


def _locate(text: str, needle: str):
    """Line and column of the first occurrence of ``needle`` (None, None if absent)."""
    pos = text.find(needle)
    if pos < 0:
        return None, None
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _scalar(value, text, key):
    try:
        return parse_scalar(value if isinstance(value, (str, int)) else str(value))
    except ParseError as err:
        line, col = _locate(text, json.dumps(value)) if not isinstance(value, int) else (None, None)
        raise ParseError(f"bad scalar in {key}: {err}", line, col) from None


def _entries(data, key, width, dimension, text):
    rows = data.get(key, [])
    if not isinstance(rows, list):
        raise ParseError(f"'{key}' must be a list", *_locate(text, f'"{key}"'))
    out = []
    for n, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != width:
            raise ParseError(f"{key}[{n}] must have {width} entries", *_locate(text, json.dumps(row)))
        *idx, s = row
        for i in idx:
            if not isinstance(i, int) or not 0 <= i < dimension:
                raise ParseError(f"{key}[{n}]: index {i!r} outside 0..{dimension - 1}",
                                 *_locate(text, json.dumps(row)))
        out.append((*idx, _scalar(s, text, f"{key}[{n}]")))
    return out


def _finite_spec(data: dict, text: str) -> LoadedSpec:
    dimension = data.get("dimension")
    if not isinstance(dimension, int) or dimension < 1:
        raise ParseError("'dimension' must be a positive integer", *_locate(text, '"dimension"'))
    name = str(data.get("name", f"spec[{dimension}]"))
    constants = _entries(data, "structure_constants", 4, dimension, text)
    alg = finite_algebra(name, dimension, constants)
    gates = {"associativity": check_associativity(alg, dimension),
             "nondegeneracy": check_nondegenerate(alg, dimension)}
    for gate, verdict in gates.items():
        if not verdict.ok:
            raise GateFailed(gate, verdict)
    spec = LoadedSpec(alg=alg, gates=gates)
    if "coproduct" not in data:
        return spec
    table = {}
    for a, i, j, s in _entries(data, "coproduct", 4, dimension, text):
        add_term(table.setdefault(a, {}), (i, j), s)
    cp = TensorValuedCoproduct(alg, lambda a: Element.wrap(dict(table.get(a, {}))), f"Δ[{name}]")
    if "counit" in data:
        values = data["counit"]
        if not isinstance(values, list) or len(values) != dimension:
            raise ParseError(f"'counit' must list {dimension} scalars", *_locate(text, '"counit"'))
        cp.counit = Functional.from_values(
            {k: _scalar(v, text, f"counit[{k}]") for k, v in enumerate(values)}, "ε")
    maps = data.get("maps", {})
    if not isinstance(maps, dict):
        raise ParseError("'maps' must be an object", *_locate(text, '"maps"'))
    for key, rows in maps.items():
        if key not in ("T1", "T2", "T3", "T4"):
            raise ParseError(f"unknown map table {key!r}", *_locate(text, f'"{key}"'))
        verdict = _check_table(cp, int(key[1]), _entries(maps, key, 5, dimension, text), dimension)
        spec.gates[f"maps.{key}"] = verdict
        if not verdict.ok:
            raise GateFailed(f"{key} table", verdict)
    spec.cp = cp
    return spec


def _check_table(cp, which, rows, dimension):
    given = {}
    for x, y, i, j, s in rows:
        add_term(given.setdefault((x, y), {}), (i, j), s)
    T = cp.oracle(which)
    for x in range(dimension):
        for y in range(dimension):
            want = Element.wrap(dict(given.get((x, y), {})))
            got = T(x, y)
            if got != want:
                return fails((x, y), dimension, f"the table disagrees with T{which} computed from Δ",
                             table=want, computed=got)
    return verified(dimension, exact=True)
