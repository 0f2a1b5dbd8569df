"""Core module for configuration, errors and shared reports."""

from .config import AppConfig, Config
from .errors import (
    BranchCutError,
    ConsistencyError,
    ConvergenceError,
    DimensionMismatchError,
    DomainError,
    EllipticDomainError,
    InvalidGeneratorError,
    MolnarError,
    NearBoundaryError,
    NearPoleError,
    NotPositiveDefiniteError,
    PrecisionLossError,
    SingularMatrixError,
    StripDomainError,
)
from .report import Finding, Severity, ValidationReport

__all__ = [
    "AppConfig",
    "Config",
    "BranchCutError",
    "ConsistencyError",
    "ConvergenceError",
    "DimensionMismatchError",
    "DomainError",
    "EllipticDomainError",
    "InvalidGeneratorError",
    "MolnarError",
    "NearBoundaryError",
    "NearPoleError",
    "NotPositiveDefiniteError",
    "PrecisionLossError",
    "SingularMatrixError",
    "StripDomainError",
    "Finding",
    "Severity",
    "ValidationReport",
]
