"""Representing functions of Molnár means: strip functions, the elliptic
kernel, closed-form families and membership validation."""

from typing import Union

import numpy as np
from numpy.typing import ArrayLike

from .base import RepresentingFunction
from .functions import (
    ArithmeticFunction,
    CallableFunction,
    ExtremalFunction,
    FAlphaFunction,
    GeneratorFunction,
    GeometricFunction,
    HarmonicFunction,
    SineSeriesFunction,
    build_function,
    normalize_type,
)
from .integral import f_integral_eval, f_kernel_eval
from .kernel import (
    EllipticKernelParams,
    ep_fourier_coefficient,
    ep_jacobi,
    ep_series,
    extremal_quadrature,
    f_extremal,
    s_star,
    verify_ep_fourier_coefficient,
)
from .strip import StripFunction, psi_recover, s_fourier, s_quadrature
from .validation import molnar_validate


def f_eval(rf: RepresentingFunction, z: ArrayLike) -> Union[float, complex, np.ndarray]:
    """f(z) on principal branches; real x > 0 gives a real positive value."""
    return rf.evaluate(z)


__all__ = [
    "RepresentingFunction",
    "ArithmeticFunction",
    "CallableFunction",
    "ExtremalFunction",
    "FAlphaFunction",
    "GeneratorFunction",
    "GeometricFunction",
    "HarmonicFunction",
    "SineSeriesFunction",
    "build_function",
    "normalize_type",
    "f_eval",
    "f_integral_eval",
    "f_kernel_eval",
    "EllipticKernelParams",
    "ep_fourier_coefficient",
    "ep_jacobi",
    "ep_series",
    "extremal_quadrature",
    "f_extremal",
    "s_star",
    "verify_ep_fourier_coefficient",
    "StripFunction",
    "psi_recover",
    "s_fourier",
    "s_quadrature",
    "molnar_validate",
]
