"""Verdicts returned by every checker, plus the JSON-friendly rendering of witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from .scalar import RationalFunction, format_scalar


class Status(str, Enum):
    HOLDS = "holds"
    VERIFIED_TO_DEPTH = "verified_to_depth"
    FAILS = "fails"
    PRECONDITION_NOT_MET = "precondition_not_met"
    UNKNOWN_TO_DEPTH = "unknown_to_depth"


@dataclass(frozen=True)
class Verdict:
    status: Status
    depth: Optional[int] = None
    witness: Any = None
    detail: str = ""
    evidence: dict = field(default_factory=dict, compare=False)

    @property
    def ok(self) -> bool:
        return self.status in (Status.HOLDS, Status.VERIFIED_TO_DEPTH)

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    @property
    def skipped(self) -> bool:
        return self.status is Status.PRECONDITION_NOT_MET

    def witness_text(self) -> str:
        if self.witness is None:
            return self.detail or self.status.value
        return f"{render(self.witness)}" + (f" ({self.detail})" if self.detail else "")

    def to_json(self) -> dict:
        out = {"status": self.status.value, "depth": self.depth,
               "witness": jsonable(self.witness)}
        if self.witness is not None:
            out["witness_text"] = render(self.witness)
        if self.detail:
            out["detail"] = self.detail
        if self.evidence:
            out["evidence"] = jsonable(self.evidence)
        return out

    def __str__(self):
        depth = "" if self.depth is None else f" (depth {self.depth})"
        tail = f": {self.witness_text()}" if self.witness is not None or self.detail else ""
        return f"{self.status.value}{depth}{tail}"


def holds(detail="", **evidence) -> Verdict:
    return Verdict(Status.HOLDS, None, None, detail, evidence)


def verified(depth, detail="", exact=False, **evidence) -> Verdict:
    if exact:
        return Verdict(Status.HOLDS, depth, None, detail, evidence)
    return Verdict(Status.VERIFIED_TO_DEPTH, depth, None, detail, evidence)


def fails(witness, depth=None, detail="", **evidence) -> Verdict:
    return Verdict(Status.FAILS, depth, witness, detail, evidence)


def precondition(detail, depth=None) -> Verdict:
    return Verdict(Status.PRECONDITION_NOT_MET, depth, None, detail)


def unknown(detail, depth=None, witness=None) -> Verdict:
    return Verdict(Status.UNKNOWN_TO_DEPTH, depth, witness, detail)


def conjunction(verdicts, depth=None) -> Verdict:
    """Combine clause verdicts: the first failure wins, then skips, then to-depth."""
    verdicts = list(verdicts)
    for status in (Status.FAILS, Status.PRECONDITION_NOT_MET, Status.UNKNOWN_TO_DEPTH):
        for v in verdicts:
            if v.status is status:
                return v
    if any(v.status is Status.VERIFIED_TO_DEPTH for v in verdicts):
        return Verdict(Status.VERIFIED_TO_DEPTH, depth)
    return Verdict(Status.HOLDS, depth)


# -- rendering -------------------------------------------------------------------

def render(obj) -> str:
    """Human-readable text for indices, scalars, elements and tuples."""
    if hasattr(obj, "render"):
        return obj.render()
    if isinstance(obj, (int, Fraction, RationalFunction)) and not isinstance(obj, bool):
        return format_scalar(obj)
    if isinstance(obj, tuple):
        return "(" + ", ".join(render(x) for x in obj) + ")"
    if isinstance(obj, list):
        return "[" + ", ".join(render(x) for x in obj) + "]"
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{k}: {render(v)}" for k, v in obj.items()) + "}"
    return str(obj)


def jsonable(obj):
    """Deterministic JSON-compatible structure."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, (Fraction, RationalFunction)):
        return format_scalar(obj)
    if isinstance(obj, Enum):
        return obj.value
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    return render(obj)
