"""Jacobi elliptic functions sn, cn, dn for real argument (parameter convention)."""

import math
from typing import Optional, Tuple, Union

import numpy as np
from numpy.typing import ArrayLike

from ..core.errors import EllipticDomainError

LANDEN_STOP = 2.0 * np.finfo(float).eps
LANDEN_MAX_DEPTH = 40

RealOrArray = Union[float, np.ndarray]


def _landen_sequence(m: float, m_complement: float) -> Tuple[list, list]:
    """AGM ladder a_n, c_n started at (1, sqrt(1 - m)).

    Stops once c_n <= 2 eps a_n or when the pair (a_n, b_n) no longer changes;
    near convergence a_n and b_n can settle one ulp apart.
    """
    a = [1.0]
    c = [math.sqrt(m)]
    b = math.sqrt(m_complement)
    while abs(c[-1]) > LANDEN_STOP * a[-1]:
        if len(a) > LANDEN_MAX_DEPTH:
            raise EllipticDomainError(f"Landen descent did not terminate for m = {m}")
        a_n = a[-1]
        a_next, b_next = 0.5 * (a_n + b), math.sqrt(a_n * b)
        a.append(a_next)
        c.append(0.5 * (a_n - b))
        if a_next == a_n and b_next == b:
            break
        b = b_next
    return a, c


def jacobi_sn_cn_dn(
    u: ArrayLike, m: float, m_complement: Optional[float] = None
) -> Tuple[RealOrArray, RealOrArray, RealOrArray]:
    """Return (sn(u|m), cn(u|m), dn(u|m)) for real u and 0 < m < 1.

    Uses the descending Landen (AGM) scheme: phi_N = 2^N a_N u, then
    phi_{n-1} = (phi_n + asin(c_n/a_n sin phi_n)) / 2, sn = sin phi_0,
    cn = cos phi_0. The argument is first reduced modulo 4K. dn is taken from
    dn^2 = (1 - m) + m cn^2, which has no cancellation as m -> 1.

    Args:
        u: Real argument, scalar or array.
        m: Parameter m = k^2.
        m_complement: 1 - m when known more accurately than `1 - m`.
    """
    if m_complement is None:
        m_complement = 1.0 - m
    if not (0.0 < m < 1.0) or not (0.0 < m_complement <= 1.0):
        raise EllipticDomainError(f"Elliptic parameter m must lie in (0, 1), got {m}")

    a, c = _landen_sequence(m, m_complement)
    depth = len(a) - 1
    quarter_period = math.pi / (2.0 * a[depth])

    scalar = np.ndim(u) == 0
    u = np.asarray(u, dtype=float)
    if not np.all(np.isfinite(u)):
        raise EllipticDomainError("Jacobi functions need a finite argument")

    full_period = 4.0 * quarter_period
    reduced = u - full_period * np.round(u / full_period)

    phi = (2.0 ** depth) * a[depth] * reduced
    for n in range(depth, 0, -1):
        phi = 0.5 * (phi + np.arcsin(c[n] / a[n] * np.sin(phi)))

    sn = np.sin(phi)
    cn = np.cos(phi)
    dn = np.sqrt(m_complement + m * cn * cn)

    if scalar:
        return float(sn), float(cn), float(dn)
    return sn, cn, dn
