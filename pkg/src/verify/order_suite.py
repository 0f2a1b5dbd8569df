"""Order structure of the Molnár class of period p.

f_min <= f <= f_max for every member, harmonic <= f <= arithmetic, the
parametrization Psi -> f is order preserving, and the extremals satisfy
f_min f_max = x and tend to the harmonic / arithmetic means as m -> 1.
"""

from typing import Callable, List, Sequence, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel

from ..elliptic import EllipticModulus, solve_modulus_for_period
from ..generator import GeneratorSpec
from ..repfun import (
    ArithmeticFunction,
    EllipticKernelParams,
    ExtremalFunction,
    GeneratorFunction,
    HarmonicFunction,
    RepresentingFunction,
    SineSeriesFunction,
    StripFunction,
    ep_series,
    extremal_quadrature,
    f_extremal,
    f_kernel_eval,
    verify_ep_fourier_coefficient,
)
from ..repfun.validation import scaling_violation, symmetry_violation
from .config import SuiteConfig
from .report import CheckResult, VerificationReport
from .suite import Suite

INTERIOR_HARMONICS = (1, 2, 3)
RANDOM_GENERATORS = 4
RANDOM_MAX_HARMONICS = 4
SQUARE_AMPLITUDES = (-0.5, -0.25, 0.0, 0.25, 0.5)
ROUTE_POINTS = 8
KERNEL_LAMBDAS = 16
LIMIT_COMPLEMENT = 1e-12
LIMIT_GRID = np.logspace(-1, 1, 33)
LATTICE_EXCLUSION = 1e-6


def _subsample(grid: np.ndarray, count: int) -> np.ndarray:
    idx = np.unique(np.linspace(0, grid.size - 1, min(count, grid.size)).round().astype(int))
    return grid[idx]


def _worst_relative_excess(lower: np.ndarray, upper: np.ndarray, scale: np.ndarray) -> Tuple[float, int]:
    """max over points of max(0, lower - upper) / scale, and its index."""
    excess = np.maximum(lower - upper, 0.0) / np.abs(scale)
    idx = int(np.argmax(excess))
    return float(excess[idx]), idx


class OrderSuite(Suite):
    """Sandwich, order-preservation and elliptic-limit checks for one period."""

    suite_name = "order"

    def __init__(self, p: float, cfg: SuiteConfig):
        super().__init__(cfg)
        self.p = p
        self.modulus = solve_modulus_for_period(p)
        self.c = self.modulus.type_scalar
        self.grid = cfg.grid.points()
        self.f_min = ExtremalFunction(self.modulus, "min")
        self.f_max = ExtremalFunction(self.modulus, "max")

    @property
    def subject(self) -> str:
        return f"period p={self.p:.17g} (m={self.modulus.m:.17g})"

    def checks(self) -> List[Tuple[str, Callable[[int], CheckResult]]]:
        return [
            ("extremal_identity", self.check_extremal_identity),
            ("extremal_membership", self.check_extremal_membership),
            ("sandwich", self.check_sandwich),
            ("classical_sandwich", self.check_classical_sandwich),
            ("order_preservation", self.check_order_preservation),
            ("square_wave_routes", self.check_square_wave_routes),
            ("kernel_positivity", self.check_kernel_positivity),
            ("m_limit", self.check_m_limit),
            ("extremal_quadrature", self.check_extremal_quadrature),
            ("fourier_coefficient", self.check_fourier_coefficient),
        ]

    def interior_functions(self, index: int) -> List[RepresentingFunction]:
        """f_n for a few n plus fourier generators with random admissible coefficients."""
        family: List[RepresentingFunction] = [SineSeriesFunction(n, self.c) for n in INTERIOR_HARMONICS]
        for trial in range(RANDOM_GENERATORS):
            rng = self.cfg.rng(index, trial)
            raw = rng.standard_normal(int(rng.integers(1, RANDOM_MAX_HARMONICS + 1)))
            # sum |B_n| <= 1/2 keeps |Psi| <= 1/2
            coefficients = raw / np.sum(np.abs(raw)) * rng.uniform(0.0, 0.5)
            gen = GeneratorSpec.fourier(self.p, coefficients)
            family.append(GeneratorFunction(StripFunction.for_generator(gen)))
        return family

    def _values(self, rf: RepresentingFunction) -> np.ndarray:
        return np.asarray(rf.evaluate(self.grid), dtype=float)

    def check_extremal_identity(self, index: int) -> CheckResult:
        gap = np.abs(self._values(self.f_min) * self._values(self.f_max) - self.grid) / self.grid
        idx = int(np.argmax(gap))
        return self.measured("extremal_identity", float(gap[idx]), witness=f"x={self.grid[idx]:.17g}")

    def check_extremal_membership(self, index: int) -> CheckResult:
        worst, witness = 0.0, ""
        for rf in (self.f_min, self.f_max):
            for label, (gap, x) in (("symmetry", symmetry_violation(rf, self.grid)),
                                    ("scaling", scaling_violation(rf, self.c, self.grid))):
                if gap > worst:
                    worst, witness = gap, f"{rf.kind} {label} x={x:.17g}"
        return self.measured("extremal_membership", worst, witness=witness)

    def check_sandwich(self, index: int) -> CheckResult:
        low, high = self._values(self.f_min), self._values(self.f_max)
        worst, witness, margins = 0.0, "", []
        for rf in self.interior_functions(index):
            values = self._values(rf)
            below, i = _worst_relative_excess(low, values, values)
            above, j = _worst_relative_excess(values, high, values)
            margins.append(float(np.min(np.minimum(values - low, high - values) / values)))
            if max(below, above) > worst:
                worst = max(below, above)
                witness = f"{rf.describe()} x={self.grid[i if below >= above else j]:.17g}"
        return self.measured("sandwich", worst, witness=witness,
                             detail=f"smallest relative margin {min(margins):.3e}")

    def check_classical_sandwich(self, index: int) -> CheckResult:
        harmonic = self._values(HarmonicFunction())
        arithmetic = self._values(ArithmeticFunction())
        worst, witness = 0.0, ""
        for rf in [self.f_min, self.f_max] + self.interior_functions(index):
            values = self._values(rf)
            below, i = _worst_relative_excess(harmonic, values, values)
            above, j = _worst_relative_excess(values, arithmetic, values)
            if max(below, above) > worst:
                worst = max(below, above)
                witness = f"{rf.describe()} x={self.grid[i if below >= above else j]:.17g}"
        return self.measured("classical_sandwich", worst, witness=witness)

    def _square_waves(self) -> List[GeneratorFunction]:
        return [GeneratorFunction(StripFunction.for_generator(GeneratorSpec.square_wave(self.p, s)))
                for s in SQUARE_AMPLITUDES]

    def check_order_preservation(self, index: int) -> CheckResult:
        """Square waves s_1 < s_2 give f_1 <= f_2; the ends are f_min and f_max."""
        waves = [self._values(rf) for rf in self._square_waves()]
        worst, witness = 0.0, ""
        for (s_lo, lo), (s_hi, hi) in zip(zip(SQUARE_AMPLITUDES, waves), zip(SQUARE_AMPLITUDES[1:], waves[1:])):
            gap, i = _worst_relative_excess(lo, hi, hi)
            if gap > worst:
                worst, witness = gap, f"s={s_lo:g} vs s={s_hi:g} x={self.grid[i]:.17g}"
        ends = max(float(np.max(np.abs(waves[0] - self._values(self.f_min)) / waves[0])),
                   float(np.max(np.abs(waves[-1] - self._values(self.f_max)) / waves[-1])))
        if ends > worst:
            worst, witness = ends, "amplitude -1/2 / +1/2 square wave vs f_min / f_max"
        return self.measured("order_preservation", worst, witness=witness)

    def check_square_wave_routes(self, index: int) -> CheckResult:
        """Closed form sqrt(x) exp(2 s S_*) against the kernel integral."""
        points = _subsample(self.grid, ROUTE_POINTS)
        worst, witness = 0.0, ""
        for rf in self._square_waves():
            closed = np.asarray(rf.evaluate(points), dtype=float)
            kernel = np.asarray(f_kernel_eval(rf.generator, points, tolerance=1e-12), dtype=float)
            gap = np.abs(closed - kernel) / closed
            idx = int(np.argmax(gap))
            if gap[idx] > worst:
                worst, witness = float(gap[idx]), f"s={rf.generator.amplitude:g} x={points[idx]:.17g}"
        return self.measured("square_wave_routes", worst, witness=witness)

    def check_kernel_positivity(self, index: int) -> CheckResult:
        params = EllipticKernelParams.for_period(self.p)
        lam = np.linspace(0.0, 0.5 * self.p, KERNEL_LAMBDAS + 2)[1:-1]
        lattice = np.abs(np.log(self.grid) / self.p - np.round(np.log(self.grid) / self.p))
        worst, witness = 0.0, ""
        for x in self.grid[lattice * self.p > LATTICE_EXCLUSION]:
            values = np.asarray(ep_series(params, lam, x), dtype=float)
            idx = int(np.argmin(values))
            if -values[idx] > worst:
                worst, witness = float(-values[idx]), f"lambda={lam[idx]:.17g} x={x:.17g}"
        return self.measured("kernel_positivity", worst, witness=witness)

    def check_m_limit(self, index: int) -> CheckResult:
        """m = 1 - 1e-12: f_max ~ (x + 1)/2 and f_min ~ 2x/(x + 1) on [0.1, 10]."""
        near_one = EllipticModulus.from_parameter(1.0 - LIMIT_COMPLEMENT, LIMIT_COMPLEMENT)
        f_max = np.asarray(f_extremal(near_one, LIMIT_GRID, "max"))
        f_min = np.asarray(f_extremal(near_one, LIMIT_GRID, "min"))
        gap = np.maximum(np.abs(f_max - 0.5 * (LIMIT_GRID + 1.0)), np.abs(f_min - 2.0 * LIMIT_GRID / (LIMIT_GRID + 1.0)))
        idx = int(np.argmax(gap))
        return self.measured("m_limit", float(gap[idx]), witness=f"x={LIMIT_GRID[idx]:.17g}",
                             detail=f"surrogate period {near_one.period:.6g}")

    def check_extremal_quadrature(self, index: int) -> CheckResult:
        points = _subsample(self.grid, ROUTE_POINTS)
        worst, witness = 0.0, ""
        for which in ("min", "max"):
            closed = np.asarray(f_extremal(self.modulus, points, which))
            quadrature = np.asarray(extremal_quadrature(self.modulus, points, which))
            gap = np.abs(closed - quadrature) / closed
            idx = int(np.argmax(gap))
            if gap[idx] > worst:
                worst, witness = float(gap[idx]), f"f_{which} x={points[idx]:.17g}"
        return self.measured("extremal_quadrature", worst, witness=witness)

    def check_fourier_coefficient(self, index: int) -> CheckResult:
        worst, witness = 0.0, ""
        for n in (1, 2, 3):
            for w in (0.5, complex(1.0, 0.5), self.p / 3.0):
                closed, quadrature = verify_ep_fourier_coefficient(self.p, n, w)
                gap = abs(closed - quadrature)
                if gap > worst:
                    worst, witness = gap, f"n={n} w={w}"
        return self.measured("fourier_coefficient", worst, witness=witness)


def run_order_suite(p: float, cfg: SuiteConfig) -> VerificationReport:
    """Sandwich and order checks for the Molnár class of period p."""
    return OrderSuite(p, cfg).run_all_checks()


class EnvelopeTrend(BaseModel):
    """Spread of the extremals around sqrt(x) for a list of periods."""
    periods: List[float]
    max_ratio: List[float]   # max over the grid of f_max(x) / sqrt(x)
    min_ratio: List[float]   # min over the grid of f_min(x) / sqrt(x)

    @property
    def widening(self) -> bool:
        """True when the band around sqrt(x) grows with the period."""
        order = np.argsort(self.periods)
        upper = np.asarray(self.max_ratio)[order]
        lower = np.asarray(self.min_ratio)[order]
        return bool(np.all(np.diff(upper) >= -1e-12) and np.all(np.diff(lower) <= 1e-12))


def envelope_trend(periods: Sequence[float], grid: Sequence[float]) -> EnvelopeTrend:
    """As p grows the extremals spread from sqrt(x) toward the harmonic and arithmetic envelopes."""
    grid = np.asarray(grid, dtype=float)
    root = np.sqrt(grid)
    max_ratio, min_ratio = [], []
    for p in periods:
        modulus = solve_modulus_for_period(p)
        max_ratio.append(float(np.max(np.asarray(f_extremal(modulus, grid, "max")) / root)))
        min_ratio.append(float(np.min(np.asarray(f_extremal(modulus, grid, "min")) / root)))
        logger.debug(f"envelope p={p:g}: f_max/sqrt(x) <= {max_ratio[-1]:.6g}, f_min/sqrt(x) >= {min_ratio[-1]:.6g}")
    return EnvelopeTrend(periods=[float(p) for p in periods], max_ratio=max_ratio, min_ratio=min_ratio)


