"""Finite le-modules: axioms, classification and primary decomposition."""

from ._core import (
    CapacityError,
    Error,
    FormatError,
    Structure,
    UsageError,
    run_cli,
    validate,
)

__all__ = [
    "CapacityError",
    "Error",
    "FormatError",
    "Structure",
    "UsageError",
    "run_cli",
    "validate",
]
