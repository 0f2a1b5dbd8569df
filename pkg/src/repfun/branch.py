"""Principal-branch bookkeeping for arguments z off the cut (-inf, 0]."""

import numpy as np
from numpy.typing import ArrayLike

from ..core.errors import BranchCutError, DomainError


def check_off_cut(z: ArrayLike) -> np.ndarray:
    """Complex array of z, rejecting the closed negative real axis."""
    z = np.asarray(z, dtype=complex)
    if np.any(~np.isfinite(z)):
        raise DomainError("argument must be finite")
    on_cut = (z.imag == 0.0) & (z.real <= 0.0)
    if np.any(on_cut):
        bad = z[on_cut].ravel()[0] if z.ndim else z
        raise BranchCutError(f"z = {complex(bad)} lies on the branch cut (-inf, 0]")
    return z


def is_positive_real(z: ArrayLike) -> bool:
    """True when every entry is a real number > 0 (dtype aside)."""
    z = np.asarray(z)
    if np.iscomplexobj(z):
        return bool(np.all(z.imag == 0.0) and np.all(z.real > 0.0))
    return bool(np.all(z > 0))


def check_positive(x: ArrayLike) -> np.ndarray:
    """Float array of x > 0; BranchCutError for x <= 0, DomainError for nan/inf."""
    x = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(x)):
        raise DomainError("argument must be a finite real number > 0")
    if np.any(x <= 0):
        raise BranchCutError(f"x = {float(np.min(x))} lies on the branch cut (-inf, 0]")
    return x
