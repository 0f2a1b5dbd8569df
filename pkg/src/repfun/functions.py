"""Concrete representing functions and the kind-name factory."""

import math
from typing import Callable, Optional

import numpy as np
from loguru import logger

from ..core.errors import DomainError, PrecisionLossError
from ..elliptic import EllipticModulus, solve_modulus_for_period
from ..generator import GeneratorSpec
from .base import RepresentingFunction
from .kernel import Extremal, f_extremal, s_star
from .series import sin_squared_over_sinh
from .strip import StripFunction

MAX_LOG_TYPE = 700.0


class GeometricFunction(RepresentingFunction):
    """f_#(z) = sqrt(z); Molnár of every type."""

    kind = "geometric"

    def _evaluate_complex(self, z):
        return np.sqrt(z)

    def _evaluate_real(self, x):
        return np.sqrt(x)


class ArithmeticFunction(RepresentingFunction):
    """f_nabla(z) = (1 + z) / 2."""

    kind = "arithmetic"

    def _evaluate_complex(self, z):
        return 0.5 * (1.0 + z)

    def _evaluate_real(self, x):
        return 0.5 * (1.0 + x)

    def value_at_zero(self) -> float:
        return 0.5


class HarmonicFunction(RepresentingFunction):
    """f_!(z) = 2z / (1 + z)."""

    kind = "harmonic"

    def _evaluate_complex(self, z):
        return 2.0 * z / (1.0 + z)

    def _evaluate_real(self, x):
        return 2.0 * x / (1.0 + x)


def _sine_family(z: np.ndarray, phase_scale: float, width: float) -> np.ndarray:
    """sqrt(z) exp(pi sin^2(phase_scale log z) / sinh(width)) for nonzero width."""
    bump = sin_squared_over_sinh(phase_scale * np.log(z), abs(width))
    return np.sqrt(z) * np.exp(math.copysign(math.pi, width) * bump)


class SineSeriesFunction(RepresentingFunction):
    """f_n(z) = sqrt(z) exp(pi sin^2(pi n log z / (2 log c)) / sinh(pi^2 n / log c)).

    One sine harmonic B_n = 1/2 with period p = 2 log c.
    """

    kind = "fn"

    def __init__(self, n: int, c: float):
        if int(n) != n or n == 0:
            raise DomainError(f"n must be a nonzero integer, got {n}")
        if not c > 1.0 or not math.isfinite(c):
            raise DomainError(f"c must be a finite real > 1, got {c}")
        self.n = int(n)
        self.c = float(c)
        self._log_c = math.log(self.c)

    @property
    def period_c(self) -> Optional[float]:
        return self.c

    def _evaluate_complex(self, z):
        return _sine_family(z, math.pi * self.n / (2.0 * self._log_c), math.pi ** 2 * self.n / self._log_c)

    def describe(self) -> str:
        return f"fn(n={self.n}, c={self.c:.17g})"


class FAlphaFunction(RepresentingFunction):
    """f_alpha(z) = sqrt(z) exp(pi sin^2(alpha log z) / sinh(2 pi alpha)).

    Same function as f_n with n = sign(alpha) and c = e^{pi / (2 |alpha|)}.
    """

    kind = "falpha"

    def __init__(self, alpha: float):
        if alpha == 0 or not math.isfinite(alpha):
            raise DomainError(f"alpha must be a finite nonzero real, got {alpha}")
        if math.pi / (2.0 * abs(alpha)) > MAX_LOG_TYPE:
            raise DomainError(f"alpha = {alpha:g} is too small: its type scalar overflows")
        self.alpha = float(alpha)

    @property
    def period_c(self) -> Optional[float]:
        return math.exp(math.pi / (2.0 * abs(self.alpha)))

    def _evaluate_complex(self, z):
        return _sine_family(z, self.alpha, 2.0 * math.pi * self.alpha)

    def describe(self) -> str:
        return f"falpha(alpha={self.alpha:.17g})"


class ExtremalFunction(RepresentingFunction):
    """f_min or f_max of the class with the modulus' period; positive axis only."""

    def __init__(self, modulus: EllipticModulus, which: Extremal):
        if which not in ("min", "max"):
            raise ValueError(f"which must be 'min' or 'max', got {which!r}")
        self.modulus = modulus
        self.which = which
        self.kind = f"f{which}"

    @property
    def period_c(self) -> Optional[float]:
        return self.modulus.type_scalar

    def _evaluate_complex(self, z):
        if np.all(z.imag == 0.0):
            return np.asarray(self._evaluate_real(z.real), dtype=complex)
        raise DomainError("extremal representing functions are evaluated on the positive axis only")

    def _evaluate_real(self, x):
        return np.asarray(f_extremal(self.modulus, x, self.which), dtype=float)

    def describe(self) -> str:
        return f"{self.kind}(p={self.modulus.period:.17g}, m={self.modulus.m:.17g})"


class GeneratorFunction(RepresentingFunction):
    """f(z) = sqrt(z) e^{S(log z)} for a generator-built strip function.

    Square waves on the positive axis use the extremal closed form
    f_s(x) = sqrt(x) exp(2 s S_*(log x)).
    """

    kind = "generator"

    def __init__(self, strip: StripFunction):
        self.strip = strip
        self.modulus: Optional[EllipticModulus] = None
        if strip.generator.form == "square_wave":
            try:
                self.modulus = solve_modulus_for_period(strip.period)
            except PrecisionLossError as e:
                logger.debug(f"{strip.generator.describe()}: no elliptic closed form ({e}); using quadrature")

    @property
    def generator(self) -> GeneratorSpec:
        return self.strip.generator

    @property
    def period_c(self) -> Optional[float]:
        if 0.5 * self.strip.period > MAX_LOG_TYPE:
            return None
        return self.generator.type_scalar

    def _evaluate_complex(self, z):
        return np.sqrt(z) * np.exp(self.strip.evaluate(np.log(z)))

    def _evaluate_real(self, x):
        if self.modulus is not None:
            return np.sqrt(x) * np.exp(2.0 * self.generator.amplitude * s_star(self.modulus, np.log(x)))
        return np.sqrt(x) * np.exp(np.real(self.strip.evaluate(np.log(x))))

    def describe(self) -> str:
        return f"generator {self.generator.describe()} via {self.strip.method}"


class CallableFunction(RepresentingFunction):
    """Wraps an arbitrary positive-axis callable, e.g. a negative control like x^2."""

    kind = "callable"

    def __init__(self, func: Callable[[np.ndarray], np.ndarray], name: str = "callable",
                 period_c: Optional[float] = None, zero_value: float = 0.0):
        self._func = func
        self._name = name
        self._period_c = period_c
        self._zero_value = zero_value

    @property
    def period_c(self) -> Optional[float]:
        return self._period_c

    def _evaluate_complex(self, z):
        return np.asarray(self._func(z), dtype=complex)

    def _evaluate_real(self, x):
        return np.asarray(self._func(x), dtype=float)

    def value_at_zero(self) -> float:
        return self._zero_value

    def describe(self) -> str:
        return self._name


def normalize_type(c: float) -> float:
    """M_c = M_{1/c}: map a type scalar to its representative max(c, 1/c) > 1."""
    if not c > 0 or c == 1.0 or not math.isfinite(c):
        raise DomainError(f"type scalar must be positive, finite and != 1, got {c}")
    return max(c, 1.0 / c)


def _require(kind: str, **params) -> None:
    missing = [name for name, value in params.items() if value is None]
    if missing:
        raise ValueError(f"kind '{kind}' needs {', '.join(missing)}")


def build_function(kind: str, *, n: Optional[int] = None, c: Optional[float] = None,
                   alpha: Optional[float] = None, p: Optional[float] = None,
                   amplitude: Optional[float] = None, generator: Optional[GeneratorSpec] = None,
                   tolerance: Optional[float] = None) -> RepresentingFunction:
    """Build a representing function from its kind name.

    Args:
        kind: geometric, arithmetic, harmonic, fn, falpha, fmin, fmax, square or generator
        n: harmonic index of fn
        c: type scalar of fn (or of fmin/fmax when p is not given); c < 1 is normalized
        alpha: parameter of falpha
        p: period of fmin/fmax/square
        amplitude: square-wave amplitude s, |s| <= 1/2
        generator: generator spec for kind 'generator'
        tolerance: absolute tolerance of quadrature-based strip evaluation

    Returns:
        RepresentingFunction of the requested kind
    """
    if kind == "geometric":
        return GeometricFunction()
    if kind == "arithmetic":
        return ArithmeticFunction()
    if kind == "harmonic":
        return HarmonicFunction()
    if kind == "fn":
        _require(kind, n=n, c=c)
        return SineSeriesFunction(n, normalize_type(c))
    if kind == "falpha":
        _require(kind, alpha=alpha)
        return FAlphaFunction(alpha)
    if kind in ("fmin", "fmax"):
        if p is None:
            _require(kind, c=c)
            p = 2.0 * math.log(normalize_type(c))
        return ExtremalFunction(solve_modulus_for_period(p), kind[1:])
    if kind == "square":
        _require(kind, p=p, amplitude=amplitude)
        generator = GeneratorSpec.square_wave(p, amplitude)
    elif kind != "generator":
        raise ValueError(f"Unknown representing function kind '{kind}'")

    _require(kind, generator=generator)
    return GeneratorFunction(StripFunction.for_generator(generator, tolerance))
