"""Strip functions S on D = {|Im w| < pi}, built from a generator Psi.

Two routes are provided: the sine-series closed form for fourier-form
generators and adaptive quadrature of the Poisson-type integral

    S(w) = 1/2 * int_R Psi(lam) sinh(w/2) / (cosh(lam/2) cosh((w - lam)/2)) dlam

for any generator. `psi_recover` inverts the map at the strip boundary.
"""

import math
from typing import Literal, Optional, Union

import numpy as np
from loguru import logger
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self

from ..core.config import Config
from ..core.errors import ConvergenceError, InvalidGeneratorError, NearBoundaryError, StripDomainError
from ..generator import GeneratorSpec, evaluate, validate
from .quadrature import integrate_complex, segment_edges
from .series import sin_squared_over_sinh

DEFAULT_MARGIN = 1e-3
SMOOTH_SEGMENT = 4.0

RECOVERY_DELTA = 1e-2
RECOVERY_STEPS = 5
RECOVERY_AGREEMENT = 1e-4
RECOVERY_MARGIN = 1e-4
RECOVERY_TOLERANCE = 1e-11

StripMethod = Literal["fourier_series", "quadrature"]


def _check_strip(w: np.ndarray) -> None:
    if np.any(~np.isfinite(w)):
        raise StripDomainError("strip argument must be finite")
    if np.any(np.abs(w.imag) >= math.pi):
        raise StripDomainError(f"|Im w| must be < pi, got max {np.max(np.abs(w.imag)):.17g}")


def s_fourier(gen: GeneratorSpec, w: ArrayLike) -> Union[complex, np.ndarray]:
    """S(w) = pi * sum_n B_n (1 - cos(a n w)) / sinh(a pi n), a = 2 pi / p.

    The sum stops at the generator's last harmonic. Terms beyond N would be bounded
    by |B_n| (1 + cosh(a n Im w)) / sinh(a pi n) ~ 2 |B_n| e^{-a n (pi - |Im w|)},
    so the truncation is exact for a finite sine series and geometric otherwise.
    """
    scalar = np.ndim(w) == 0
    w = np.asarray(w, dtype=complex)
    _check_strip(w)

    if gen.form == "zero":
        values = np.zeros_like(w)
    elif gen.form != "fourier":
        raise ValueError(f"s_fourier needs a fourier-form generator, got {gen.form}")
    else:
        a = gen.frequency
        n = gen.harmonics
        b = np.asarray(gen.coefficients, dtype=float)
        # 1 - cos(x) = 2 sin^2(x/2)
        terms = 2.0 * sin_squared_over_sinh(0.5 * a * np.multiply.outer(w, n), a * math.pi * n)
        values = math.pi * (terms @ b)

    return complex(values) if scalar else values


def _integrand(gen: GeneratorSpec, w: complex):
    half_sinh = 0.5 * np.sinh(0.5 * w)

    def func(lam: float) -> complex:
        psi = evaluate(gen, lam)
        if psi == 0.0:
            return 0j
        return psi * half_sinh / (np.cosh(0.5 * lam) * np.cosh(0.5 * (w - lam)))

    return func


def s_quadrature(gen: GeneratorSpec, w: complex, tolerance: Optional[float] = None,
                 margin: float = DEFAULT_MARGIN) -> complex:
    """S(w) by adaptive quadrature of the integral representation.

    The integrand decays like e^{-|lam - Re w|/2} e^{-|lam|/2}, so the range
    is cut at |lam| <= |Re w| + 2 ln(4 / tolerance). Segments break at the
    jumps of square waves and around the near-peak at lam = Re w.
    """
    tolerance = tolerance if tolerance is not None else Config.get().tolerance
    w = complex(w)
    _check_strip(np.asarray(w))
    if abs(w.imag) > math.pi * (1.0 - margin):
        raise NearBoundaryError(
            f"|Im w| = {abs(w.imag):.17g} is within the {margin:g} margin of pi; quadrature is ill-conditioned"
        )
    if gen.form == "zero" or w == 0:
        return 0j

    bound = abs(w.real) + 2.0 * math.log(4.0 / tolerance)
    width = 0.5 * gen.period if gen.form == "square_wave" else SMOOTH_SEGMENT
    # peak half-width ~ distance to the boundary
    gap = math.pi - abs(w.imag)
    extra = [w.real] + [w.real + sign * k * gap for sign in (-1, 1) for k in (1, 4, 16, 64)]
    edges = segment_edges(-bound, bound, width, extra)

    value = integrate_complex(_integrand(gen, w), edges, tolerance)
    logger.trace(f"s_quadrature {gen.describe()} w={w}: {len(edges) - 1} segments -> {value}")
    return value


class StripFunction(BaseModel):
    """S in W_p, evaluated by the sine series or by quadrature."""

    model_config = ConfigDict(frozen=True)

    generator: GeneratorSpec
    method: StripMethod = Field(default="quadrature", description="fourier_series or quadrature")
    tolerance: float = Field(default=1e-10, gt=0, description="Target absolute error of S values")

    @model_validator(mode="after")
    def check_generator(self) -> Self:
        if self.method == "fourier_series" and self.generator.form == "square_wave":
            raise ValueError("the fourier_series method needs a fourier or zero generator")
        report = validate(self.generator)
        if not report.is_valid:
            raise InvalidGeneratorError(report)
        return self

    @classmethod
    def for_generator(cls, gen: GeneratorSpec, tolerance: Optional[float] = None) -> "StripFunction":
        """Series when the generator has one, quadrature otherwise."""
        method = "quadrature" if gen.form == "square_wave" else "fourier_series"
        tolerance = tolerance if tolerance is not None else Config.get().tolerance
        return cls(generator=gen, method=method, tolerance=tolerance)

    @property
    def period(self) -> float:
        return self.generator.period

    def evaluate(self, w: ArrayLike, margin: float = DEFAULT_MARGIN) -> Union[complex, np.ndarray]:
        if self.method == "fourier_series":
            return s_fourier(self.generator, w)
        if np.ndim(w) == 0:
            return s_quadrature(self.generator, w, self.tolerance, margin)
        w = np.asarray(w, dtype=complex)
        flat = [s_quadrature(self.generator, v, self.tolerance, margin) for v in w.ravel()]
        return np.array(flat, dtype=complex).reshape(w.shape)

    def __call__(self, w: ArrayLike) -> Union[complex, np.ndarray]:
        return self.evaluate(w)


def _fourier_boundary_limit(gen: GeneratorSpec, lam: float) -> float:
    # Im S(lam + i mu) / pi = sum B_n sin(a n lam) sinh(a n mu) / sinh(a pi n); ratio -> 1
    phases = gen.frequency * lam * gen.harmonics
    return float(np.sin(phases) @ np.asarray(gen.coefficients, dtype=float))


def psi_recover(sf: StripFunction, lam: float, strict: bool = True) -> float:
    """Psi(lam) = lim_{mu -> pi-} Im S(lam + i mu) / pi.

    Fourier generators take the limit termwise. Otherwise Im S / pi is
    sampled at mu_k = pi - delta 2^{-k} and Richardson-extrapolated assuming
    an error expansion in powers of pi - mu. With strict=False a disagreement
    between the last two extrapolants is logged instead of raised (used next
    to the jumps of square waves, where the expansion is slow to settle).
    """
    gen = sf.generator
    if gen.form == "zero":
        return 0.0
    if gen.form == "fourier":
        return _fourier_boundary_limit(gen, lam)

    tolerance = min(sf.tolerance, RECOVERY_TOLERANCE)
    table = []
    for k in range(RECOVERY_STEPS):
        h = RECOVERY_DELTA * 2.0 ** (-k)
        sample = s_quadrature(gen, complex(lam, math.pi - h), tolerance, margin=RECOVERY_MARGIN).imag / math.pi
        row = [sample]
        for j in range(1, k + 1):
            factor = 2.0 ** j
            row.append((factor * row[j - 1] - table[k - 1][j - 1]) / (factor - 1.0))
        table.append(row)

    best, previous = table[-1][-1], table[-2][-2]
    if abs(best - previous) > RECOVERY_AGREEMENT:
        message = f"boundary limit at lam={lam:.6g} did not settle: {previous:.8g} vs {best:.8g}"
        if strict:
            raise ConvergenceError(message)
        logger.warning(message)
    return float(best)
