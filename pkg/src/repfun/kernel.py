"""The elliptic kernel E_p(lam; z) and the extremal Molnár functions.

E_p(lam; z) = sum_n (z - 1)^2 (u_n - 1) / ((u_n + 1)(z + u_n)(z + 1/u_n)),
u_n = e^{lam + p n}, is odd in lam with period p, vanishes at lam = 0 and
lam = p/2, and is positive on (0, p/2) for real z > 0. Integrating Psi
against it over a half period gives log(f(z) / sqrt(z)). At z = c = e^{p/2}
it collapses to a Jacobi sn, and the half-period integral of the kernel
itself yields the extremal functions f_min and f_max.
"""

import math
from typing import Literal, Tuple, Union

import numpy as np
from loguru import logger
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field

from ..core.errors import ConsistencyError, NearPoleError
from ..elliptic import EllipticModulus
from .branch import check_off_cut, check_positive
from .quadrature import integrate_complex, integrate_real
from .series import sin_squared_over_sinh

DEFAULT_KERNEL_TOLERANCE = 1e-15
POLE_GUARD = 1e-8

Extremal = Literal["min", "max"]


def required_terms(period: float, tolerance: float, abs_lambda: float, z: complex) -> int:
    """Symmetric truncation order N for the kernel series.

    With u = e^t real, |(z + u)(z + 1/u)| >= |z| e^{|t|} cos^2(arg z / 2), so
    the term at shift n is at most C e^{-(p|n| - |lam|)} with
    C = (|z| + 1)^2 / (|z| cos^2(arg z / 2)).
    """
    r = abs(z)
    half_cos = math.cos(0.5 * math.atan2(z.imag, z.real))
    bound = (r + 1.0) ** 2 / (r * half_cos * half_cos)
    return max(1, math.ceil((abs_lambda + math.log(max(bound, 1.0) / tolerance)) / period))


class EllipticKernelParams(BaseModel):
    """Period and truncation of the kernel series."""

    model_config = ConfigDict(frozen=True)

    period: float = Field(..., gt=0, allow_inf_nan=False)
    truncation_n: int = Field(..., ge=1, description="Sum runs over n = -N..N")
    tolerance: float = Field(default=DEFAULT_KERNEL_TOLERANCE, gt=0)

    @classmethod
    def for_period(cls, period: float, tolerance: float = DEFAULT_KERNEL_TOLERANCE) -> "EllipticKernelParams":
        """Truncation valid for lam in [-p/2, p/2] and z = 1; widened per call as needed."""
        return cls(period=period, truncation_n=required_terms(period, tolerance, 0.5 * period, 1 + 0j),
                   tolerance=tolerance)


def ep_series(params: EllipticKernelParams, lam: ArrayLike, z: complex) -> Union[float, complex, np.ndarray]:
    """E_p(lam; z) by the symmetric truncated series.

    Real z > 0 gives a real result. The denominators z + e^{+-t} vanish only
    for z on the negative axis; arguments whose relative distance to that
    axis is below 1e-8 are refused.
    """
    z = complex(check_off_cut(z))
    if math.cos(0.5 * math.atan2(z.imag, z.real)) < POLE_GUARD:
        raise NearPoleError(f"z = {z} is within {POLE_GUARD:g} of the poles on the negative axis")

    scalar = np.ndim(lam) == 0
    lam = np.asarray(lam, dtype=float)
    reach = float(np.max(np.abs(lam))) if lam.size else 0.0
    n_max = max(params.truncation_n, required_terms(params.period, params.tolerance, reach, z))

    shifts = params.period * np.arange(-n_max, n_max + 1, dtype=float)
    t = np.add.outer(lam, shifts)
    s = np.exp(-np.abs(t))
    # (u-1)u / ((u+1)(z+u)(zu+1)) at u = e^t for t < 0, minus the same at u = e^{-t} for t >= 0
    h = (s - 1.0) * s / ((s + 1.0) * (z + s) * (z * s + 1.0))
    terms = np.where(t < 0, h, -h)
    values = (z - 1.0) ** 2 * terms.sum(axis=-1)

    if z.imag == 0.0:
        values = values.real
    return values.item() if scalar else values


def ep_jacobi(mod: EllipticModulus, lam: ArrayLike) -> Union[float, np.ndarray]:
    """E_p(lam; c) = 2 sqrt(m) K' / pi * sn(K' lam / pi, m) with c = e^{p/2}."""
    sn, _, _ = mod.sn_cn_dn(mod.log_argument(lam))
    return 2.0 * mod.sqrt_m * mod.big_k_prime / math.pi * sn


def ep_fourier_coefficient(p: float, n: int, w: ArrayLike) -> Union[complex, np.ndarray]:
    """Closed form of int_0^{p/2} E_p(lam; e^w) sin(2 pi n lam / p) dlam."""
    if n < 1:
        raise ValueError(f"harmonic index must be a positive integer, got {n}")
    scalar = np.ndim(w) == 0
    w = np.asarray(w, dtype=complex)
    values = 2.0 * math.pi * sin_squared_over_sinh(math.pi * n * w / p, 2.0 * math.pi ** 2 * n / p)
    return complex(values) if scalar else values


def verify_ep_fourier_coefficient(p: float, n: int, w: complex, tolerance: float = 1e-10) -> Tuple[complex, complex]:
    """(closed form, quadrature of the kernel) for the sine coefficient identity."""
    params = EllipticKernelParams.for_period(p)
    z = np.exp(complex(w))
    freq = 2.0 * math.pi * n / p

    def integrand(lam: float) -> complex:
        return complex(ep_series(params, lam, z)) * math.sin(freq * lam)

    edges = list(np.linspace(0.0, 0.5 * p, 2 * n + 1))
    quadrature = integrate_complex(integrand, edges, tolerance)
    closed = ep_fourier_coefficient(p, n, w)
    logger.debug(f"E_p sine coefficient p={p:g} n={n} w={w}: closed={closed} quad={quadrature}")
    return closed, quadrature


def _extremal_combination(mod: EllipticModulus, log_x: np.ndarray) -> np.ndarray:
    _, cn, dn = mod.sn_cn_dn(mod.log_argument(log_x))
    combo = np.asarray(dn + mod.sqrt_m * cn, dtype=float)
    if np.any(combo <= 0.0):
        raise ConsistencyError(f"dn + sqrt(m) cn <= 0 (min {combo.min():.3e}) for m = {mod.m!r}")
    return combo


def s_star(mod: EllipticModulus, w: ArrayLike) -> Union[float, np.ndarray]:
    """Extremal strip function S_*(w) = log((1 + sqrt m) / (dn(u) + sqrt m cn(u))), u = K' w / pi, real w."""
    scalar = np.ndim(w) == 0
    w = np.asarray(w, dtype=float)
    values = np.log1p(mod.sqrt_m) - np.log(_extremal_combination(mod, w))
    return float(values) if scalar else values


def f_extremal(mod: EllipticModulus, x: ArrayLike, which: Extremal) -> Union[float, np.ndarray]:
    """f_min(x) = sqrt(x) (dn + sqrt(m) cn) / (1 + sqrt(m)); f_max(x) = x / f_min(x)."""
    if which not in ("min", "max"):
        raise ValueError(f"which must be 'min' or 'max', got {which!r}")
    scalar = np.ndim(x) == 0
    x = check_positive(x)

    f_min = np.sqrt(x) * _extremal_combination(mod, np.log(x)) / (1.0 + mod.sqrt_m)
    values = f_min if which == "min" else x / f_min
    return float(values) if scalar else values


def kernel_half_integral(params: EllipticKernelParams, z: complex, tolerance: float = 1e-12) -> complex:
    """int_0^{p/2} E_p(lam; z) dlam."""
    edges = [0.0, 0.25 * params.period, 0.5 * params.period]
    if complex(z).imag == 0.0:
        return complex(integrate_real(lambda lam: ep_series(params, lam, z), edges, tolerance))
    return integrate_complex(lambda lam: complex(ep_series(params, lam, z)), edges, tolerance)


def extremal_quadrature(mod: EllipticModulus, x: ArrayLike, which: Extremal,
                        tolerance: float = 1e-12) -> Union[float, np.ndarray]:
    """f_min / f_max as sqrt(x) exp(-+ 1/2 int_0^{p/2} E_p(lam; x) dlam)."""
    if which not in ("min", "max"):
        raise ValueError(f"which must be 'min' or 'max', got {which!r}")
    scalar = np.ndim(x) == 0
    x = check_positive(x)
    params = EllipticKernelParams.for_period(mod.period)
    sign = -0.5 if which == "min" else 0.5

    half = np.array([kernel_half_integral(params, complex(v), tolerance).real for v in x.ravel()]).reshape(x.shape)
    values = np.sqrt(x) * np.exp(sign * half)
    return float(values) if scalar else values
