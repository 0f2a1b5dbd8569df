"""Routes to f(z) that bypass the strip function.

    f(z) = sqrt(z) exp{(z - 1) int_R Psi(lam) / ((1 + e^lam)(1 + e^{-lam} z)) dlam}
    f(z) = sqrt(z) exp{int_0^{p/2} Psi(lam) E_p(lam; z) dlam}

Both serve as independent cross-checks of f = sqrt(z) e^{S(log z)}.
"""

import math
from typing import Optional, Union

import numpy as np
from loguru import logger
from numpy.typing import ArrayLike

from ..core.config import Config
from ..generator import GeneratorSpec, evaluate
from .branch import check_off_cut
from .kernel import EllipticKernelParams, ep_series
from .quadrature import integrate_complex, segment_edges

SMOOTH_SEGMENT = 4.0


def _line_weight(lam: float, z: complex) -> complex:
    """1 / ((1 + e^lam)(1 + e^{-lam} z)) without overflow."""
    if lam >= 0:
        e = math.exp(-lam)
        return e / ((1.0 + e) * (1.0 + e * z))
    e = math.exp(lam)
    return e / ((1.0 + e) * (e + z))


def _integral_exponent(gen: GeneratorSpec, z: complex, tolerance: float) -> complex:
    if gen.form == "zero" or z == 1:
        return 0j
    log_r = math.log(abs(z))
    scale = abs(z - 1.0)
    # tails decay like |z - 1| e^{-lam} and |z - 1| e^{lam} / |z|
    bound = abs(log_r) + math.log(4.0 * (1.0 + scale) * (1.0 + 1.0 / abs(z)) / tolerance)
    width = 0.5 * gen.period if gen.form == "square_wave" else SMOOTH_SEGMENT
    edges = segment_edges(-bound, bound, width, [0.0, log_r])

    def integrand(lam: float) -> complex:
        psi = evaluate(gen, lam)
        return 0j if psi == 0.0 else psi * _line_weight(lam, z)

    integral = integrate_complex(integrand, edges, tolerance / max(scale, 1.0))
    return (z - 1.0) * integral


def _kernel_exponent(gen: GeneratorSpec, z: complex, tolerance: float) -> complex:
    if gen.form == "zero" or z == 1:
        return 0j
    params = EllipticKernelParams.for_period(gen.period)
    half = 0.5 * gen.period
    edges = [0.0, 0.5 * half, half]

    def integrand(lam: float) -> complex:
        return evaluate(gen, lam) * complex(ep_series(params, lam, z))

    return integrate_complex(integrand, edges, tolerance)


def _apply(exponent, gen: GeneratorSpec, z: ArrayLike, tolerance: Optional[float]):
    tolerance = tolerance if tolerance is not None else Config.get().tolerance
    real_input = not np.iscomplexobj(z)
    scalar = np.ndim(z) == 0
    z = check_off_cut(z)

    flat = np.array([np.sqrt(v) * np.exp(exponent(gen, complex(v), tolerance)) for v in z.ravel()],
                    dtype=complex).reshape(z.shape)
    if real_input:
        flat = flat.real
    return flat.item() if scalar else flat


def f_integral_eval(gen: GeneratorSpec, z: ArrayLike, tolerance: Optional[float] = None) -> Union[complex, float, np.ndarray]:
    """f(z) from the line integral against the Cauchy-type weight; real input gives real output."""
    values = _apply(_integral_exponent, gen, z, tolerance)
    logger.trace(f"f_integral_eval {gen.describe()}: {np.size(values)} points")
    return values


def f_kernel_eval(gen: GeneratorSpec, z: ArrayLike, tolerance: Optional[float] = None) -> Union[complex, float, np.ndarray]:
    """f(z) from the half-period integral against the elliptic kernel."""
    values = _apply(_kernel_exponent, gen, z, tolerance)
    logger.trace(f"f_kernel_eval {gen.describe()}: {np.size(values)} points")
    return values
