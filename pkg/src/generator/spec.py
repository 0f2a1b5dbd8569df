"""The generator function Psi: real, odd, p-periodic, |Psi| <= 1/2."""

import math
from pathlib import Path
from typing import Literal, Tuple, Union

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self

from ..core.errors import DomainError

MAX_HARMONICS = 64

GeneratorForm = Literal["fourier", "square_wave", "zero"]


class GeneratorSpec(BaseModel):
    """Closed-form description of Psi.

    Config documents use the same field names: `period`, `form`,
    `coefficients` (B_1..B_N of the sine series) and `amplitude` (square wave).
    Structural problems (wrong fields for the form, too many harmonics) are
    rejected here; the sup-norm bound is checked by `validate`.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    period: float = Field(..., gt=0, allow_inf_nan=False, description="Period p > 0")
    form: GeneratorForm = Field(..., description="fourier, square_wave or zero")
    coefficients: Tuple[float, ...] = Field(default=(), description="Sine coefficients B_1..B_N")
    amplitude: float = Field(default=0.0, allow_inf_nan=False, description="Square-wave amplitude s")

    @model_validator(mode="after")
    def check_form_fields(self) -> Self:
        if self.form == "fourier":
            if not self.coefficients:
                raise ValueError("fourier form needs at least one coefficient")
            if len(self.coefficients) > MAX_HARMONICS:
                raise ValueError(f"fourier form is capped at {MAX_HARMONICS} harmonics, got {len(self.coefficients)}")
            if not all(math.isfinite(b) for b in self.coefficients):
                raise ValueError("fourier coefficients must be finite")
            if self.amplitude != 0.0:
                raise ValueError("amplitude is only meaningful for the square_wave form")
        elif self.form == "square_wave":
            if self.coefficients:
                raise ValueError("coefficients are only meaningful for the fourier form")
        else:
            if self.coefficients or self.amplitude != 0.0:
                raise ValueError("zero form takes no coefficients or amplitude")
        return self

    @classmethod
    def fourier(cls, period: float, coefficients) -> "GeneratorSpec":
        return cls(period=period, form="fourier", coefficients=tuple(float(b) for b in coefficients))

    @classmethod
    def square_wave(cls, period: float, amplitude: float) -> "GeneratorSpec":
        return cls(period=period, form="square_wave", amplitude=amplitude)

    @classmethod
    def zero(cls, period: float) -> "GeneratorSpec":
        return cls(period=period, form="zero")

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "GeneratorSpec":
        """Read a JSON generator document."""
        return cls.model_validate_json(Path(path).read_text())

    @property
    def frequency(self) -> float:
        """a = 2 pi / p."""
        return 2.0 * math.pi / self.period

    @property
    def type_scalar(self) -> float:
        """c = e^{p/2}."""
        return math.exp(0.5 * self.period)

    @property
    def harmonics(self) -> np.ndarray:
        """Harmonic indices 1..N of the fourier form."""
        return np.arange(1, len(self.coefficients) + 1, dtype=float)

    def __call__(self, lam: ArrayLike) -> Union[float, np.ndarray]:
        return evaluate(self, lam)

    def describe(self) -> str:
        if self.form == "fourier":
            return f"fourier(p={self.period:g}, N={len(self.coefficients)})"
        if self.form == "square_wave":
            return f"square_wave(p={self.period:g}, s={self.amplitude:g})"
        return f"zero(p={self.period:g})"


def _half_line_values(spec: GeneratorSpec, r: np.ndarray) -> np.ndarray:
    """Psi on r in [0, p)."""
    if spec.form == "zero":
        return np.zeros_like(r)

    if spec.form == "fourier":
        b = np.asarray(spec.coefficients, dtype=float)
        phases = spec.frequency * np.multiply.outer(r, spec.harmonics)
        return np.sin(phases) @ b

    # square wave, midpoint value 0 on the jumps at multiples of p/2
    half = 0.5 * spec.period
    values = np.where(r < half, spec.amplitude, -spec.amplitude)
    return np.where((r == 0.0) | (r == half), 0.0, values)


def evaluate(spec: GeneratorSpec, lam: ArrayLike) -> Union[float, np.ndarray]:
    """Psi(lambda); exactly odd and p-periodic by construction."""
    scalar = np.ndim(lam) == 0
    lam = np.asarray(lam, dtype=float)

    sign = np.sign(lam)
    reduced = np.mod(np.abs(lam), spec.period)
    values = sign * _half_line_values(spec, reduced)

    return float(values) if scalar else values


def eval_multiplicative(spec: GeneratorSpec, t: ArrayLike) -> Union[float, np.ndarray]:
    """psi(t) = Psi(log t) for t > 0; psi(1/t) = -psi(t)."""
    t_arr = np.asarray(t, dtype=float)
    if np.any(~(t_arr > 0)):
        raise DomainError("psi(t) is defined for t > 0 only")
    return evaluate(spec, np.log(t_arr))
