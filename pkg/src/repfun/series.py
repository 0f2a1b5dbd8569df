"""Overflow-free building block of the sine-squared / sinh series."""

import numpy as np
from numpy.typing import ArrayLike


def sin_squared_over_sinh(x: ArrayLike, y: ArrayLike) -> np.ndarray:
    """sin(x)^2 / sinh(y) for y > 0 and |Im x| < y / 2.

    Written as (sin(x) e^{-y/2})^2 * 2 / (1 - e^{-2y}); every exponential
    then has non-positive real part, so large harmonics cannot overflow.
    """
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=float)
    half = -0.5 * y
    scaled_sin = (np.exp(1j * x + half) - np.exp(-1j * x + half)) / 2j
    return 2.0 * scaled_sin * scaled_sin / (-np.expm1(-2.0 * y))
