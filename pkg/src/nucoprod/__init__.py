"""Exact workbench for coproducts on non-unital algebras."""
from .algebra import (AlgebraSpec, Functional, check_associativity, check_idempotent_algebra,
                      check_nondegenerate, finite_algebra, multiply)
from .element import Element
from .scalar import T, parse_scalar
from .verdict import Status, Verdict

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec", "Functional", "check_associativity", "check_idempotent_algebra",
    "check_nondegenerate", "finite_algebra", "multiply", "Element", "T", "parse_scalar",
    "Status", "Verdict", "__version__",
]
