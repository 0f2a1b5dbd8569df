"""Exception hierarchy shared by all modules.

Domain errors are raised for inputs outside an operation's domain, precision
errors when a result would be numerically meaningless. Report-style
operations (validation, verification suites) never raise for findings.
"""

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .report import ValidationReport


class MolnarError(Exception):
    """Base class for every error raised by this package."""


class DomainError(MolnarError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class EllipticDomainError(DomainError):
    """Elliptic parameter outside (0, 1) or non-positive period."""


class StripDomainError(DomainError):
    """Argument outside the strip |Im w| < pi."""


class BranchCutError(DomainError):
    """Argument on the closed negative real axis."""


class NotPositiveDefiniteError(DomainError):
    """Matrix fails the required (semi)definiteness."""


class SingularMatrixError(NotPositiveDefiniteError):
    """Inverse-based operation on a singular matrix."""


class DimensionMismatchError(DomainError):
    """Operands of a binary matrix operation differ in size."""


class PrecisionLossError(MolnarError, ArithmeticError):
    """Result cannot be computed to the requested accuracy in double precision."""


class NearBoundaryError(PrecisionLossError):
    """Strip argument too close to |Im w| = pi for quadrature."""


class NearPoleError(PrecisionLossError):
    """Elliptic kernel evaluated too close to a pole."""


class ConvergenceError(MolnarError):
    """Iterative procedure failed to converge."""


class ConsistencyError(MolnarError):
    """An identity that holds mathematically was violated numerically."""


class InvalidGeneratorError(MolnarError):
    """Generator rejected by validation; carries the report.

    Not a ValueError, so it passes through pydantic validators unwrapped.
    """

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(report.render())
