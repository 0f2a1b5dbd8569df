"""Suite configuration: scalar grid, matrix sizes, trial counts, tolerances."""

from typing import Dict, List

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator
from typing_extensions import Self

from ..core.config import Config

DEFAULT_TOLERANCES: Dict[str, float] = {
    # function suite
    "normalization": 1e-12,
    "positivity": 1e-12,
    "symmetry": 1e-10,
    "scaling": 1e-10,
    "inverse_scaling": 1e-10,
    "operator_monotone": 1e-9,
    # mean suite
    "mean_symmetry": 1e-10,
    "mean_normalization": 1e-12,
    "joint_monotonicity": 1e-9,
    "transformer": 1e-9,
    "scalar_consistency": 1e-12,
    "matrix_sandwich": 1e-9,
    "upper_semicontinuity": 1e-9,
    "geometric_closed_form": 1e-11,
    # order suite
    "extremal_identity": 1e-12,
    "extremal_membership": 1e-10,
    "sandwich": 1e-10,
    "classical_sandwich": 1e-10,
    "order_preservation": 1e-10,
    "square_wave_routes": 1e-8,
    "kernel_positivity": 1e-10,
    "m_limit": 1e-4,
    "extremal_quadrature": 1e-7,
    "fourier_coefficient": 1e-6,
}


class GridSpec(BaseModel):
    """Log-spaced positive grid."""
    count: int = Field(default=64, ge=2)
    min: float = Field(default=1e-3, gt=0)
    max: float = Field(default=1e3, gt=0)

    @model_validator(mode="after")
    def check_range(self) -> Self:
        if not self.max > self.min:
            raise ValueError(f"grid max {self.max} must exceed min {self.min}")
        return self

    def points(self) -> np.ndarray:
        return np.logspace(np.log10(self.min), np.log10(self.max), self.count)


class SuiteConfig(BaseModel):
    """Configuration shared by the verification suites."""
    grid: GridSpec = Field(default_factory=GridSpec)
    matrix_dims: List[int] = Field(default_factory=lambda: [2, 3, 4, 5])
    trials: int = Field(default=500, ge=1)
    tolerances: Dict[str, float] = Field(default_factory=dict, description="Overrides of DEFAULT_TOLERANCES")
    seed: int = Field(default_factory=lambda: Config.get().seed, ge=0)

    @field_validator("matrix_dims")
    @classmethod
    def validate_dims(cls, v: List[int]) -> List[int]:
        if not v or any(d < 1 for d in v):
            raise ValueError("matrix_dims must be a nonempty list of positive integers")
        return v

    @field_validator("tolerances")
    @classmethod
    def validate_tolerances(cls, v: Dict[str, float]) -> Dict[str, float]:
        unknown = sorted(set(v) - set(DEFAULT_TOLERANCES))
        if unknown:
            raise ValueError(f"Unknown check names: {', '.join(unknown)}")
        if any(not tol > 0 for tol in v.values()):
            raise ValueError("tolerances must be > 0")
        return v

    def tolerance(self, name: str) -> float:
        return self.tolerances.get(name, DEFAULT_TOLERANCES[name])

    def rng(self, check_index: int, trial: int = 0) -> np.random.Generator:
        """Generator for one (check, trial); independent of execution order."""
        return np.random.default_rng([self.seed, check_index, trial])
