"""Hermitian positive (semi)definite matrices with a cached eigendecomposition."""

from typing import Callable, Optional

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, model_validator
from typing_extensions import Self

from ..core.errors import DomainError, NotPositiveDefiniteError, SingularMatrixError

HERMITIAN_TOLERANCE = 1e-8
SEMIDEFINITE_FLOOR = 1e-12
RECONSTRUCTION_TOLERANCE = 1e-12


def hermitian_part(a: np.ndarray) -> np.ndarray:
    """(A + A*) / 2."""
    return 0.5 * (a + a.conj().T)


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a)
    a.setflags(write=False)
    return a


class PosDefMatrix(BaseModel):
    """Immutable Hermitian matrix, positive definite or (in semidefinite mode)
    positive semidefinite up to a floor of -1e-12 ||A||.

    Build through `from_array`; the eigendecomposition is computed once there.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    entries: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    semidefinite: bool = False

    @model_validator(mode="after")
    def check_cache(self) -> Self:
        n = self.entries.shape[0]
        if self.entries.shape != (n, n) or self.eigenvectors.shape != (n, n) or self.eigenvalues.shape != (n,):
            raise ValueError("entries, eigenvalues and eigenvectors disagree in size")
        rebuilt = (self.eigenvectors * self.eigenvalues) @ self.eigenvectors.conj().T
        scale = max(float(np.max(np.abs(self.eigenvalues))), np.finfo(float).tiny)
        if np.max(np.abs(rebuilt - self.entries)) > RECONSTRUCTION_TOLERANCE * scale * n:
            raise ValueError("eigendecomposition does not reconstruct the entries")
        return self

    @classmethod
    def from_array(cls, a: ArrayLike, semidefinite: bool = False,
                   scale: Optional[float] = None) -> "PosDefMatrix":
        """Symmetrize, eigendecompose and check definiteness.

        In semidefinite mode eigenvalues down to -1e-12 * max(||A||, scale) are
        accepted. Results of matrix operations pass the norm of their operands
        as `scale`, so a nearly vanishing output is judged against its inputs.

        Raises:
            DomainError: if `a` is not square or far from Hermitian
            NotPositiveDefiniteError: if an eigenvalue is below the allowed floor
        """
        a = np.atleast_2d(np.asarray(a, dtype=complex))
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise DomainError(f"expected a nonempty square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise DomainError("matrix entries must be finite")

        norm = float(np.max(np.abs(a))) if a.size else 0.0
        if np.max(np.abs(a - a.conj().T)) > HERMITIAN_TOLERANCE * max(norm, 1.0):
            raise DomainError("matrix is not Hermitian")
        a = hermitian_part(a)

        eigenvalues, eigenvectors = np.linalg.eigh(a)
        smallest = float(eigenvalues[0])
        floor_scale = max(float(np.max(np.abs(eigenvalues))), scale or 0.0)
        if semidefinite:
            if smallest < -SEMIDEFINITE_FLOOR * floor_scale:
                raise NotPositiveDefiniteError(f"smallest eigenvalue {smallest:.3e} below -1e-12 * {floor_scale:.3e}")
        elif not smallest > 0:
            raise NotPositiveDefiniteError(f"smallest eigenvalue {smallest:.3e} is not positive")

        return cls(entries=_frozen(a), eigenvalues=_frozen(eigenvalues),
                   eigenvectors=_frozen(eigenvectors), semidefinite=semidefinite)

    @classmethod
    def identity(cls, dim: int) -> "PosDefMatrix":
        return cls.from_array(np.eye(dim))

    @classmethod
    def diag(cls, values: ArrayLike, semidefinite: bool = False) -> "PosDefMatrix":
        return cls.from_array(np.diag(np.asarray(values, dtype=float)), semidefinite=semidefinite)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def norm(self) -> float:
        """Spectral norm."""
        return float(np.max(np.abs(self.eigenvalues)))

    @property
    def is_strict(self) -> bool:
        return bool(self.eigenvalues[0] > 0)

    def require_strict(self, singular: bool = False) -> None:
        if not self.is_strict:
            error = SingularMatrixError if singular else NotPositiveDefiniteError
            raise error(f"{self.dim}x{self.dim} matrix is not strictly positive "
                        f"(smallest eigenvalue {self.eigenvalues[0]:.3e})")

    def apply(self, operator: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
        """U diag(operator(eigenvalues)) U* as a plain array."""
        values = operator(self.eigenvalues)
        return (self.eigenvectors * values) @ self.eigenvectors.conj().T

    def sqrt(self) -> np.ndarray:
        return self.apply(lambda s: np.sqrt(np.clip(s, 0.0, None)))

    def inv_sqrt(self) -> np.ndarray:
        self.require_strict(singular=True)
        return self.apply(lambda s: 1.0 / np.sqrt(s))

    def inverse(self) -> np.ndarray:
        self.require_strict(singular=True)
        return self.apply(lambda s: 1.0 / s)

    def to_array(self) -> np.ndarray:
        return np.array(self.entries)

    def shifted(self, eps: float) -> "PosDefMatrix":
        """A + eps I, strictly positive for eps > 0."""
        return PosDefMatrix.from_array(self.entries + eps * np.eye(self.dim))
