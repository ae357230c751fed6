"""psgkit: a workbench for finite partial semigroups, their largeness
notions, and their partial dynamical systems."""

from .bitset import SubsetMask
from .core import (
    UNDEFINED,
    CapExceeded,
    InternalCheckError,
    PartialSemigroup,
    PreconditionError,
    StructureError,
    ValidationReport,
    validate,
)
from .dynamics import PartialDynSystem, PartialMap, TotalMapInf

__version__ = "0.1.0"

__all__ = [
    "SubsetMask",
    "UNDEFINED",
    "CapExceeded",
    "InternalCheckError",
    "PartialSemigroup",
    "PartialDynSystem",
    "PartialMap",
    "TotalMapInf",
    "PreconditionError",
    "StructureError",
    "ValidationReport",
    "validate",
    "__version__",
]
