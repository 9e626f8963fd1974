"""Exception types shared across the package."""
from __future__ import annotations


class NucoprodError(Exception):
    """Base class for all package errors."""


class InvalidDepth(NucoprodError, ValueError):
    pass


class SchemeMismatch(NucoprodError, ValueError):
    pass


class NotFiniteDimensional(NucoprodError, ValueError):
    pass


class DegenerateProduct(NucoprodError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class OracleInconsistent(NucoprodError, AssertionError):
    pass


class SpanSolveFailed(NucoprodError, LookupError):
    pass


class NonIdempotentQ(NucoprodError, ValueError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class NotHomomorphism(NucoprodError, ValueError):
    pass


class PreconditionNotMet(NucoprodError):
    pass


class ParseError(NucoprodError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        elif column is not None:
            where = f" (column {column})"
        super().__init__(message + where)
        self.line = line
        self.column = column


class GateFailed(NucoprodError):
    def __init__(self, gate, verdict):
        super().__init__(f"{gate} gate failed: {verdict.witness_text()}")
        self.gate = gate
        self.verdict = verdict
