"""Adaptive quadrature helpers over piecewise segments (scipy QUADPACK)."""

import warnings
from typing import Callable, Iterable, List

import numpy as np
from loguru import logger
from scipy import integrate
from scipy.integrate import IntegrationWarning

QUAD_LIMIT = 200
QUAD_EPSREL = 1e-12


def segment_edges(lo: float, hi: float, width: float, extra: Iterable[float] = ()) -> List[float]:
    """Sorted breakpoints covering [lo, hi]: a lattice of spacing `width`
    anchored at 0 plus any `extra` points inside the interval."""
    start = np.ceil(lo / width) * width
    lattice = np.arange(start, hi, width) if start < hi else np.array([])
    points = {float(lo), float(hi)}
    points.update(float(x) for x in lattice if lo < x < hi)
    points.update(float(x) for x in extra if lo < x < hi)
    return sorted(points)


def _quad(func: Callable[[float], float], a: float, b: float, epsabs: float) -> float:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", IntegrationWarning)
        value, error = integrate.quad(func, a, b, epsabs=epsabs, epsrel=QUAD_EPSREL, limit=QUAD_LIMIT)
    for w in caught:
        logger.warning(f"quad on [{a:.6g}, {b:.6g}]: {str(w.message).splitlines()[0]} (error estimate {error:.2e})")
    return value


def integrate_real(func: Callable[[float], float], edges: List[float], tolerance: float) -> float:
    """Sum of adaptive integrals over consecutive segments, total abs error ~ tolerance."""
    epsabs = tolerance / max(len(edges) - 1, 1)
    return sum(_quad(func, a, b, epsabs) for a, b in zip(edges[:-1], edges[1:]))


def integrate_complex(func: Callable[[float], complex], edges: List[float], tolerance: float) -> complex:
    """Complex-valued integrand of a real variable: real and imaginary parts separately."""
    real = integrate_real(lambda x: func(x).real, edges, 0.5 * tolerance)
    imag = integrate_real(lambda x: func(x).imag, edges, 0.5 * tolerance)
    return complex(real, imag)
