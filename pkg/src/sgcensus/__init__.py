"""Numerical semigroup enumeration, classification, and census tooling."""

from .buchweitz import BuchweitzReport, classify_buchweitz
from .census import CensusConfig, CensusRow, run_census
from .classify import FrobeniusClass, TypeAK, eisenbud_harris, frobenius_class
from .core import (
    InfiniteComplementError,
    InvalidGapSetError,
    Semigroup,
    SemigroupError,
)
from .enumeration import ResourceLimitError, TreeNode, enumerate_by_genus
from .kunz import KunzVector, KunzViolationError

__version__ = "0.1.0"

__all__ = [
    "BuchweitzReport",
    "CensusConfig",
    "CensusRow",
    "FrobeniusClass",
    "InfiniteComplementError",
    "InvalidGapSetError",
    "KunzVector",
    "KunzViolationError",
    "ResourceLimitError",
    "Semigroup",
    "SemigroupError",
    "TreeNode",
    "TypeAK",
    "classify_buchweitz",
    "enumerate_by_genus",
    "eisenbud_harris",
    "frobenius_class",
    "run_census",
    "__version__",
]
