"""Functional calculus and Kubo-Ando means A sigma_f B = A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2}."""

from typing import TYPE_CHECKING, List, Literal, Optional, Sequence

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from ..core.errors import ConsistencyError, DimensionMismatchError
from .matrix import SEMIDEFINITE_FLOOR, PosDefMatrix, hermitian_part

if TYPE_CHECKING:
    from ..repfun.base import RepresentingFunction

ClassicalKind = Literal["arithmetic", "harmonic", "geometric", "parallel_sum"]

GAP_WARNING = 1e-6


def default_eps_schedule() -> List[float]:
    """eps_k = 1e-2 * 2^{-k}, k = 0..20."""
    return [1e-2 * 2.0 ** (-k) for k in range(21)]


def _same_dim(a: PosDefMatrix, b: PosDefMatrix) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"operands are {a.dim}x{a.dim} and {b.dim}x{b.dim}")


def _function_values(f: "RepresentingFunction", spectrum: np.ndarray) -> np.ndarray:
    """f on a spectrum; eigenvalues at or below the roundoff floor map to f(0+)."""
    floor = SEMIDEFINITE_FLOOR * max(float(np.max(np.abs(spectrum))), np.finfo(float).tiny)
    positive = spectrum > floor
    values = np.full(spectrum.shape, f.value_at_zero(), dtype=float)
    if np.any(positive):
        values[positive] = np.asarray(f.evaluate(spectrum[positive]), dtype=float)
    if np.any(~np.isfinite(values)) or np.any(values < 0):
        raise ConsistencyError(f"{f.describe()} is not positive on the spectrum {spectrum}")
    return values


def mat_apply(f: "RepresentingFunction", a: PosDefMatrix) -> PosDefMatrix:
    """f(A) = U diag(f(lam_i)) U* for strictly positive A."""
    a.require_strict()
    values = _function_values(f, a.eigenvalues)
    return PosDefMatrix.from_array(hermitian_part(a.apply(lambda _: values)), semidefinite=True)


def kubo_ando_mean(f: "RepresentingFunction", a: PosDefMatrix, b: PosDefMatrix) -> PosDefMatrix:
    """A sigma_f B for A > 0 and B >= 0.

    Raises:
        DimensionMismatchError: if the operands differ in size
        NotPositiveDefiniteError: if A is singular
    """
    _same_dim(a, b)
    a.require_strict()
    root, inv_root = a.sqrt(), a.inv_sqrt()

    congruence = hermitian_part(inv_root @ b.entries @ inv_root)
    spectrum, vectors = np.linalg.eigh(congruence)
    middle = (vectors * _function_values(f, spectrum)) @ vectors.conj().T

    return PosDefMatrix.from_array(hermitian_part(root @ middle @ root), semidefinite=True, scale=a.norm + b.norm)


def classical_mean(kind: ClassicalKind, a: PosDefMatrix, b: PosDefMatrix) -> PosDefMatrix:
    """Closed forms: (A + B)/2, 2 (A^{-1} + B^{-1})^{-1}, A # B and A : B.

    Raises:
        SingularMatrixError: for inverse-based kinds on singular input
    """
    _same_dim(a, b)
    if kind == "arithmetic":
        return PosDefMatrix.from_array(0.5 * (a.entries + b.entries), semidefinite=True, scale=a.norm + b.norm)

    if kind in ("harmonic", "parallel_sum"):
        total = PosDefMatrix.from_array(hermitian_part(a.inverse() + b.inverse()))
        parallel = hermitian_part(total.inverse())
        return PosDefMatrix.from_array(2.0 * parallel if kind == "harmonic" else parallel)

    if kind == "geometric":
        b.require_strict(singular=True)
        root, inv_root = a.sqrt(), a.inv_sqrt()
        middle = PosDefMatrix.from_array(hermitian_part(inv_root @ b.entries @ inv_root))
        return PosDefMatrix.from_array(hermitian_part(root @ middle.sqrt() @ root))

    raise ValueError(f"Unknown classical mean '{kind}'")


class RegularizedMean(BaseModel):
    """Final iterate of the eps-regularized mean and its convergence record."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    mean: PosDefMatrix
    schedule: List[float]
    iterates: List[PosDefMatrix] = Field(repr=False)
    gaps: List[float] = Field(description="Spectral-norm distance between consecutive iterates")

    @property
    def final_gap(self) -> float:
        return self.gaps[-1] if self.gaps else float("inf")

    @property
    def converged(self) -> bool:
        return self.final_gap <= GAP_WARNING


def regularized_mean(f: "RepresentingFunction", a: PosDefMatrix, b: PosDefMatrix,
                     eps_schedule: Optional[Sequence[float]] = None) -> RegularizedMean:
    """Semidefinite A sigma_f B as the limit of (A + eps I) sigma_f (B + eps I).

    A gap above 1e-6 between the last two iterates is logged as a warning,
    not raised.
    """
    _same_dim(a, b)
    schedule = list(eps_schedule) if eps_schedule is not None else default_eps_schedule()
    if not schedule or any(e <= 0 for e in schedule):
        raise ValueError("eps schedule must be a nonempty list of positive reals")
    if any(later >= earlier for earlier, later in zip(schedule, schedule[1:])):
        raise ValueError("eps schedule must be strictly decreasing")

    iterates = [kubo_ando_mean(f, a.shifted(eps), b.shifted(eps)) for eps in schedule]
    gaps = [float(np.linalg.norm(later.entries - earlier.entries, 2))
            for earlier, later in zip(iterates, iterates[1:])]

    result = RegularizedMean(mean=iterates[-1], schedule=schedule, iterates=iterates, gaps=gaps)
    if not result.converged:
        logger.warning(f"regularized {f.describe()} mean: final gap {result.final_gap:.3e} "
                       f"exceeds {GAP_WARNING:g} at eps = {schedule[-1]:.3e}")
    else:
        logger.debug(f"regularized {f.describe()} mean converged, gap {result.final_gap:.3e}")
    return result
