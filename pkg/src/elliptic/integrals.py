"""Complete elliptic integral of the first kind by the arithmetic-geometric mean.

Parameter convention: every function here takes the PARAMETER m = k**2,
not the modulus k, and K'(m) = K(1 - m). scipy.special.ellipk uses the same
convention; many textbooks and some libraries use k instead.
"""

import math
from typing import Tuple

from loguru import logger

from ..core.errors import ConvergenceError, EllipticDomainError

AGM_MAX_ITERATIONS = 64
AGM_RELATIVE_TOLERANCE = 4e-16


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive numbers.

    Converges quadratically; about 8 iterations reach machine precision for
    moderate ratios and a few more when b/a is tiny.
    """
    if a <= 0 or b <= 0:
        raise EllipticDomainError(f"AGM needs positive arguments, got ({a}, {b})")

    for iteration in range(AGM_MAX_ITERATIONS):
        if abs(a - b) <= AGM_RELATIVE_TOLERANCE * a:
            logger.trace(f"AGM converged after {iteration} iterations")
            return 0.5 * (a + b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)

    raise ConvergenceError(f"AGM did not converge in {AGM_MAX_ITERATIONS} iterations")


def _check_parameter(m: float) -> None:
    if not (0.0 < m < 1.0):
        raise EllipticDomainError(f"Elliptic parameter m must lie in (0, 1), got {m}")


def complete_elliptic_k(m: float) -> float:
    """K(m) = integral_0^{pi/2} d(theta) / sqrt(1 - m sin^2 theta), 0 < m < 1."""
    _check_parameter(m)
    return math.pi / (2.0 * agm(1.0, math.sqrt(1.0 - m)))


def complete_elliptic_k_pair(m: float, m_complement: float) -> Tuple[float, float]:
    """Return (K(m), K(1 - m)) given m and an accurately known 1 - m.

    Passing the complement separately keeps K' accurate when m is within
    rounding of 0 and K accurate when m is within rounding of 1.
    """
    # 1 - m rounds to exactly 1.0 once m < 1e-16; that is still a valid pair.
    if not (0.0 < m < 1.0) or not (0.0 < m_complement <= 1.0):
        raise EllipticDomainError(f"Elliptic parameter pair ({m}, {m_complement}) outside (0, 1)")
    if abs(m + m_complement - 1.0) > 1e-12:
        raise EllipticDomainError(f"m = {m} and 1 - m = {m_complement} are inconsistent")

    big_k = math.pi / (2.0 * agm(1.0, math.sqrt(m_complement)))
    big_k_prime = math.pi / (2.0 * agm(1.0, math.sqrt(m)))
    return big_k, big_k_prime
