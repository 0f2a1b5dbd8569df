"""Elliptic modulus linked to a period p through 4 pi K(m) / K'(m) = p."""

import math
from typing import Optional, Tuple

import numpy as np
from loguru import logger
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self

from ..core.errors import ConvergenceError, EllipticDomainError, PrecisionLossError
from .integrals import complete_elliptic_k_pair
from .jacobi import jacobi_sn_cn_dn

MIN_COMPLEMENT = 1e-15
BISECTION_WIDTH = 1e-8
SECANT_TOLERANCE = 1e-14
MAX_LOGIT = 700.0


class EllipticModulus(BaseModel):
    """Parameter m in (0, 1) with cached K(m) and K'(m) = K(1 - m).

    `m_complement` holds 1 - m to full relative precision; it matters when
    m is within a few ulps of 1 (the m -> 1 limit of the extremal means).
    """

    model_config = ConfigDict(frozen=True)

    m: float = Field(..., gt=0.0, lt=1.0)
    m_complement: float = Field(..., gt=0.0, le=1.0)
    big_k: float = Field(..., gt=0.0)
    big_k_prime: float = Field(..., gt=0.0)

    @model_validator(mode="after")
    def check_cached_integrals(self) -> Self:
        big_k, big_k_prime = complete_elliptic_k_pair(self.m, self.m_complement)
        if abs(big_k - self.big_k) > 1e-14 * big_k or abs(big_k_prime - self.big_k_prime) > 1e-14 * big_k_prime:
            raise ValueError("Cached K(m), K'(m) do not match the parameter")
        return self

    @classmethod
    def from_parameter(cls, m: float, m_complement: Optional[float] = None) -> "EllipticModulus":
        """Build the modulus for a given m (optionally with an exact 1 - m)."""
        if m_complement is None:
            m_complement = 1.0 - m
        big_k, big_k_prime = complete_elliptic_k_pair(m, m_complement)
        return cls(m=m, m_complement=m_complement, big_k=big_k, big_k_prime=big_k_prime)

    @property
    def period(self) -> float:
        """p = 4 pi K / K'."""
        return 4.0 * math.pi * self.big_k / self.big_k_prime

    @property
    def type_scalar(self) -> float:
        """c = e^{p/2}, the scaling constant of the matching Molnár class."""
        return math.exp(0.5 * self.period)

    @property
    def sqrt_m(self) -> float:
        return math.sqrt(self.m)

    def log_argument(self, log_x: ArrayLike) -> np.ndarray:
        """u = K' log(x) / pi, the Jacobi argument used by the extremal means."""
        return self.big_k_prime * np.asarray(log_x, dtype=float) / math.pi

    def sn_cn_dn(self, u: ArrayLike):
        return jacobi_sn_cn_dn(u, self.m, self.m_complement)


def _parameter_pair(logit: float) -> Tuple[float, float]:
    """(m, 1 - m) from t = log(m / (1 - m)), both to full relative precision."""
    if logit >= 0:
        e = math.exp(-logit)
        return 1.0 / (1.0 + e), e / (1.0 + e)
    e = math.exp(logit)
    return e / (1.0 + e), 1.0 / (1.0 + e)


def _period_residual(logit: float, p: float) -> float:
    m, m_complement = _parameter_pair(logit)
    big_k, big_k_prime = complete_elliptic_k_pair(m, m_complement)
    return 4.0 * math.pi * big_k / big_k_prime - p


def solve_modulus_for_period(p: float) -> EllipticModulus:
    """Unique m in (0, 1) with 4 pi K(m) / K'(m) = p.

    The period is strictly increasing in m. The search runs on the logit
    t = log(m / (1 - m)) so that m extremely close to 0 or 1 stays resolvable:
    adaptive bracketing, bisection to width 1e-8, then safeguarded secant.

    Raises:
        EllipticDomainError: p <= 0.
        PrecisionLossError: the solution has 1 - m < 1e-15 (p above roughly
            150) or m underflows.
    """
    if not (p > 0) or not math.isfinite(p):
        raise EllipticDomainError(f"Period must be positive and finite, got {p}")

    lo, hi = -1.0, 1.0
    while _period_residual(hi, p) < 0:
        lo, hi = hi, 2.0 * hi
        if hi > MAX_LOGIT:
            raise PrecisionLossError(f"Period {p} needs 1 - m below double precision")
    while _period_residual(lo, p) > 0:
        lo, hi = 2.0 * lo, lo
        if lo < -MAX_LOGIT:
            raise PrecisionLossError(f"Period {p} needs m below double precision")
    logger.debug(f"Modulus bracket for p={p}: logit in [{lo}, {hi}]")

    g_lo = _period_residual(lo, p)
    g_hi = _period_residual(hi, p)
    while hi - lo > BISECTION_WIDTH:
        mid = 0.5 * (lo + hi)
        g_mid = _period_residual(mid, p)
        if g_mid < 0:
            lo, g_lo = mid, g_mid
        else:
            hi, g_hi = mid, g_mid

    # Secant on the bracket ends, falling back to bisection outside it.
    t0, g0, t1, g1 = lo, g_lo, hi, g_hi
    for _ in range(60):
        if g1 == g0:
            break
        t2 = t1 - g1 * (t1 - t0) / (g1 - g0)
        if not (lo <= t2 <= hi):
            t2 = 0.5 * (lo + hi)
        g2 = _period_residual(t2, p)
        if g2 < 0:
            lo = t2
        else:
            hi = t2
        t0, g0, t1, g1 = t1, g1, t2, g2
        if abs(t1 - t0) <= SECANT_TOLERANCE * max(1.0, abs(t1)) or g2 == 0.0:
            break

    residual = abs(g1)
    if residual > 1e-12 * p:
        raise ConvergenceError(f"Modulus solver stalled for p={p}: residual {residual:.3e}")

    m, m_complement = _parameter_pair(t1)
    if m_complement < MIN_COMPLEMENT:
        raise PrecisionLossError(f"Period {p} gives 1 - m = {m_complement:.3e} < {MIN_COMPLEMENT}")
    if m <= 0.0:
        raise PrecisionLossError(f"Period {p} gives m below double precision")

    logger.debug(f"Solved p={p}: m={m!r}, 1-m={m_complement!r}")
    return EllipticModulus.from_parameter(m, m_complement)
