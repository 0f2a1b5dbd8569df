import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.core.errors import (
    BranchCutError,
    ConsistencyError,
    DomainError,
    InvalidGeneratorError,
    NearBoundaryError,
    NearPoleError,
    StripDomainError,
)
from src.elliptic import EllipticModulus, solve_modulus_for_period
from src.generator import GeneratorSpec, evaluate
from src.repfun import (
    ArithmeticFunction,
    CallableFunction,
    EllipticKernelParams,
    ExtremalFunction,
    FAlphaFunction,
    GeneratorFunction,
    GeometricFunction,
    HarmonicFunction,
    SineSeriesFunction,
    StripFunction,
    build_function,
    ep_fourier_coefficient,
    ep_jacobi,
    ep_series,
    extremal_quadrature,
    f_eval,
    f_extremal,
    f_integral_eval,
    f_kernel_eval,
    molnar_validate,
    normalize_type,
    psi_recover,
    s_fourier,
    s_quadrature,
    s_star,
    verify_ep_fourier_coefficient,
)
from src.repfun.validation import scaling_violation, symmetry_violation

C_TEN = math.exp(10.0)


def random_fourier(rng, period, max_harmonics=4):
    raw = rng.standard_normal(int(rng.integers(1, max_harmonics + 1)))
    return GeneratorSpec.fourier(period, raw / np.sum(np.abs(raw)) * rng.uniform(0.1, 0.5))


# strip functions

def test_s_fourier_examples(half_sine):
    assert s_fourier(half_sine, 0.0) == 0
    assert s_fourier(half_sine, math.pi) == pytest.approx(math.pi / math.sinh(math.pi), rel=1e-14)
    w = np.array([0.3, 1.0 + 2.0j, -4.0 + 0.5j])
    np.testing.assert_allclose(s_fourier(half_sine, w), s_fourier(half_sine, -w), rtol=1e-14)


def test_s_fourier_is_periodic(two_harmonics):
    w = np.array([0.2 + 0.1j, -1.5 + 2.9j, 7.0 - 3.0j])
    np.testing.assert_allclose(s_fourier(two_harmonics, w + 4.0), s_fourier(two_harmonics, w), atol=1e-13)


def test_s_fourier_has_no_overflow_near_the_boundary():
    spec = GeneratorSpec.fourier(0.5, [0.5 / 64] * 64)
    value = s_fourier(spec, 0.1 + 3.1j)
    assert np.isfinite(value)


def test_s_fourier_rejects(half_sine):
    with pytest.raises(StripDomainError):
        s_fourier(half_sine, 1.0 + math.pi * 1j)
    with pytest.raises(ValueError):
        s_fourier(GeneratorSpec.square_wave(20.0, 0.5), 1.0)


def test_s_quadrature_matches_series(half_sine, two_harmonics):
    assert s_quadrature(half_sine, 0.0) == 0
    assert s_quadrature(GeneratorSpec.zero(5.0), 2.0 + 1.0j) == 0
    assert s_quadrature(half_sine, math.pi) == pytest.approx(math.pi / math.sinh(math.pi), abs=1e-8)
    for w in (1.0 + 1.0j, -3.0 + 2.5j, 12.0 - 0.5j):
        assert s_quadrature(two_harmonics, w) == pytest.approx(s_fourier(two_harmonics, w), abs=1e-8)


def test_s_quadrature_margin(half_sine):
    with pytest.raises(NearBoundaryError):
        s_quadrature(half_sine, complex(0.0, math.pi * (1.0 - 1e-4)))
    with pytest.raises(StripDomainError):
        s_quadrature(half_sine, complex(0.0, 4.0))


def test_strip_function_method_selection(half_sine):
    assert StripFunction.for_generator(half_sine).method == "fourier_series"
    assert StripFunction.for_generator(GeneratorSpec.square_wave(20.0, 0.5)).method == "quadrature"
    assert StripFunction.for_generator(half_sine, tolerance=1e-8).tolerance == 1e-8


def test_strip_function_rejects_invalid_generator():
    with pytest.raises(InvalidGeneratorError) as info:
        StripFunction.for_generator(GeneratorSpec.fourier(4.0, [0.7]))
    assert info.value.report.violated_checks == ["sup_norm"]


def test_strip_function_rejects_series_for_square_wave():
    with pytest.raises(ValidationError):
        StripFunction(generator=GeneratorSpec.square_wave(20.0, 0.5), method="fourier_series")


def test_strip_function_evaluates_arrays(two_harmonics):
    quadrature = StripFunction(generator=two_harmonics, method="quadrature")
    series = StripFunction.for_generator(two_harmonics)
    w = np.array([[0.5, 1.0 + 1.0j], [-2.0, 3.0 - 0.5j]])
    values = quadrature.evaluate(w)
    assert values.shape == (2, 2)
    np.testing.assert_allclose(values, series(w), atol=1e-8)


# boundary recovery

def test_psi_recover_examples(half_sine):
    assert psi_recover(StripFunction.for_generator(GeneratorSpec.zero(2.0)), 0.7) == 0.0
    assert psi_recover(StripFunction.for_generator(half_sine), math.pi / 2.0) == pytest.approx(0.5, abs=1e-12)


def test_psi_recover_series_round_trip(two_harmonics):
    sf = StripFunction.for_generator(two_harmonics)
    lam = np.linspace(0.0, 4.0, 32, endpoint=False)
    recovered = np.array([psi_recover(sf, v) for v in lam])
    np.testing.assert_allclose(recovered, evaluate(two_harmonics, lam), atol=1e-6)


@pytest.mark.parametrize("lam", [0.4, 1.0, 2.7])
def test_psi_recover_by_quadrature(two_harmonics, lam):
    sf = StripFunction(generator=two_harmonics, method="quadrature")
    assert psi_recover(sf, lam) == pytest.approx(evaluate(two_harmonics, lam), abs=1e-5)


def test_psi_recover_square_wave_away_from_jumps():
    sf = StripFunction.for_generator(GeneratorSpec.square_wave(20.0, 0.5))
    assert psi_recover(sf, 5.0) == pytest.approx(0.5, abs=1e-5)
    assert psi_recover(sf, 15.0) == pytest.approx(-0.5, abs=1e-5)


# representing functions

def test_classical_values():
    assert f_eval(GeometricFunction(), 4.0) == 2.0
    assert f_eval(ArithmeticFunction(), 3.0) == 2.0
    assert f_eval(HarmonicFunction(), 3.0) == 1.5
    assert f_eval(GeometricFunction(), -1.0 + 1e-3j) == pytest.approx(np.sqrt(-1.0 + 1e-3j))


def test_real_input_gives_real_output(grid):
    values = f_eval(SineSeriesFunction(1, C_TEN), grid)
    assert values.dtype == np.float64
    assert np.all(values > 0)


@pytest.mark.parametrize("z", [0.0, -2.0, -2.0 + 0j, np.array([1.0, -1.0])])
def test_branch_cut(z):
    with pytest.raises(BranchCutError):
        f_eval(GeometricFunction(), z)


def test_sine_series_at_type_scalar():
    expected = math.exp(5.0) * math.exp(math.pi / math.sinh(math.pi ** 2 / 10.0))
    assert f_eval(SineSeriesFunction(1, C_TEN), C_TEN) == pytest.approx(expected, rel=1e-12)


def test_falpha_matches_sine_series(grid):
    np.testing.assert_allclose(FAlphaFunction(0.5).evaluate(grid), SineSeriesFunction(1, math.exp(math.pi)).evaluate(grid),
                               rtol=1e-13)
    np.testing.assert_allclose(FAlphaFunction(-0.5).evaluate(grid), SineSeriesFunction(-1, math.exp(math.pi)).evaluate(grid),
                               rtol=1e-13)


def test_sine_series_is_generator_function(grid):
    # f_n is the generator function of B_n = 1/2 with period 2 log c
    coefficients = [0.0, 0.0, 0.5]
    built = GeneratorFunction(StripFunction.for_generator(GeneratorSpec.fourier(20.0, coefficients)))
    np.testing.assert_allclose(built.evaluate(grid), SineSeriesFunction(3, C_TEN).evaluate(grid), rtol=1e-12)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_sine_series_scaling(n, grid):
    rf = SineSeriesFunction(n, C_TEN)
    assert scaling_violation(rf, C_TEN, grid)[0] <= 1e-10
    assert symmetry_violation(rf, grid)[0] <= 1e-10


def test_function_parameter_domains():
    with pytest.raises(DomainError):
        SineSeriesFunction(0, 2.0)
    with pytest.raises(DomainError):
        SineSeriesFunction(1, 0.5)
    with pytest.raises(DomainError):
        FAlphaFunction(0.0)
    with pytest.raises(DomainError):
        FAlphaFunction(1e-4)


def test_type_scalars(half_sine):
    assert SineSeriesFunction(2, 3.0).period_c == 3.0
    assert FAlphaFunction(0.25).period_c == pytest.approx(math.exp(2.0 * math.pi))
    assert GeneratorFunction(StripFunction.for_generator(half_sine)).period_c == pytest.approx(math.exp(math.pi))
    assert GeometricFunction().period_c is None


def test_value_at_zero():
    assert ArithmeticFunction().value_at_zero() == 0.5
    assert HarmonicFunction().value_at_zero() == 0.0
    assert CallableFunction(np.square, zero_value=0.0).value_at_zero() == 0.0


def test_normalize_type():
    assert normalize_type(0.5) == 2.0
    assert normalize_type(3.0) == 3.0
    for c in (1.0, 0.0, -2.0):
        with pytest.raises(DomainError):
            normalize_type(c)


def test_build_function_kinds():
    assert isinstance(build_function("geometric"), GeometricFunction)
    fn = build_function("fn", n=2, c=1.0 / C_TEN)
    assert isinstance(fn, SineSeriesFunction) and fn.c == pytest.approx(C_TEN)
    assert build_function("falpha", alpha=0.5).alpha == 0.5
    fmax = build_function("fmax", c=C_TEN)
    assert fmax.kind == "fmax" and fmax.modulus.period == pytest.approx(20.0, rel=1e-12)
    assert build_function("fmin", p=20.0).kind == "fmin"
    square = build_function("square", p=20.0, amplitude=0.25)
    assert square.generator.amplitude == 0.25


def test_build_function_errors():
    with pytest.raises(ValueError):
        build_function("quadratic")
    with pytest.raises(ValueError):
        build_function("fn", n=1)
    with pytest.raises(ValueError):
        build_function("square", p=20.0)
    with pytest.raises(InvalidGeneratorError):
        build_function("square", p=20.0, amplitude=0.75)


def test_extremal_function_is_positive_axis_only():
    rf = ExtremalFunction(solve_modulus_for_period(20.0), "min")
    assert rf.evaluate(2.0 + 0j) == pytest.approx(rf.evaluate(2.0))
    with pytest.raises(DomainError):
        rf.evaluate(1.0 + 1.0j)


# routes to f

def test_integral_route_examples(half_sine):
    assert f_integral_eval(GeneratorSpec.zero(3.0), 9.0) == pytest.approx(3.0, rel=1e-15)
    assert f_integral_eval(half_sine, 1.0) == 1.0
    expected = math.sqrt(math.e) * np.exp(s_fourier(half_sine, 1.0)).real
    assert f_integral_eval(half_sine, math.e) == pytest.approx(expected, rel=1e-9)


def test_route_equivalence_on_the_axis(rng):
    x = np.logspace(-3, 3, 12)
    for _ in range(3):
        gen = random_fourier(rng, float(rng.uniform(2.0, 20.0)))
        series = GeneratorFunction(StripFunction.for_generator(gen)).evaluate(x)
        np.testing.assert_allclose(f_integral_eval(gen, x), series, rtol=1e-8)
        np.testing.assert_allclose(f_kernel_eval(gen, x), series, rtol=1e-8)


@pytest.mark.parametrize("z", [2.0 + 1.0j, 0.1 - 0.3j, -3.0 + 2.0j])
def test_route_equivalence_off_the_axis(two_harmonics, z):
    series = GeneratorFunction(StripFunction.for_generator(two_harmonics)).evaluate(z)
    assert f_integral_eval(two_harmonics, z) == pytest.approx(series, rel=1e-8)
    assert f_kernel_eval(two_harmonics, z) == pytest.approx(series, rel=1e-8)


def test_random_generators_scale_with_their_type_scalar(rng, grid):
    for _ in range(5):
        rf = build_function("generator", generator=random_fourier(rng, float(rng.uniform(2.0, 20.0))))
        worst, _ = scaling_violation(rf, rf.period_c, grid)
        assert worst <= 1e-10


def test_zero_generator_gives_geometric_mean():
    rf = GeneratorFunction(StripFunction.for_generator(GeneratorSpec.zero(7.0)))
    x = np.logspace(-8, 8, 101)
    np.testing.assert_allclose(rf.evaluate(x), np.sqrt(x), rtol=0, atol=1e-14 * np.sqrt(x))
    z = np.array([2.0 + 1.0j, -3.0 + 0.5j, 0.1 - 4.0j])
    np.testing.assert_allclose(rf.evaluate(z), np.sqrt(z), rtol=1e-14)


def test_strip_bound_by_series(rng):
    for _ in range(5):
        gen = random_fourier(rng, float(rng.uniform(1.0, 20.0)))
        lam = rng.uniform(-30.0, 30.0, 500)
        mu = rng.uniform(0.0, 0.99 * math.pi, 500)
        values = s_fourier(gen, lam + 1j * mu)
        assert np.all(np.abs(values.imag) <= 0.5 * mu + 1e-9)


def test_strip_bound_by_quadrature(rng):
    gen = GeneratorSpec.square_wave(6.0, 0.5)
    for lam, mu in zip(rng.uniform(-10.0, 10.0, 20), rng.uniform(0.0, 0.95 * math.pi, 20)):
        value = s_quadrature(gen, complex(lam, mu))
        assert abs(value.imag) <= 0.5 * mu + 1e-8


def test_route_rejects_branch_cut(half_sine):
    with pytest.raises(BranchCutError):
        f_integral_eval(half_sine, -1.0 + 0j)


# elliptic kernel

def test_kernel_zeros():
    params = EllipticKernelParams.for_period(20.0)
    assert ep_series(params, 0.0, 3.0) == pytest.approx(0.0, abs=1e-15)
    assert ep_series(params, 10.0, 2.0) == pytest.approx(0.0, abs=1e-12)
    np.testing.assert_allclose(ep_series(params, np.linspace(-9.0, 9.0, 7), 1.0), 0.0, atol=1e-15)


def test_kernel_symmetries(rng):
    params = EllipticKernelParams.for_period(6.0)
    lam = rng.uniform(-3.0, 3.0, 20)
    for z in (0.5, 4.0, 2.0 + 1.0j):
        np.testing.assert_allclose(ep_series(params, -lam, z), -ep_series(params, lam, z), atol=1e-13)
        np.testing.assert_allclose(ep_series(params, lam + 6.0, z), ep_series(params, lam, z), atol=1e-12)


def test_kernel_real_for_real_argument():
    params = EllipticKernelParams.for_period(10.0)
    assert isinstance(ep_series(params, 1.5, 2.0), float)
    assert isinstance(ep_series(params, 1.5, 2.0 + 0.5j), complex)
    assert ep_series(params, 1.5, 2.0) > 0


def test_kernel_poles():
    params = EllipticKernelParams.for_period(10.0)
    with pytest.raises(BranchCutError):
        ep_series(params, 1.0, -1.0)
    with pytest.raises(NearPoleError):
        ep_series(params, 1.0, -1.0 + 1e-12j)


def test_kernel_at_type_scalar_is_jacobi():
    modulus = solve_modulus_for_period(20.0)
    params = EllipticKernelParams.for_period(20.0)
    assert ep_jacobi(modulus, 0.0) == pytest.approx(0.0, abs=1e-15)
    assert ep_jacobi(modulus, 10.0) == pytest.approx(0.0, abs=1e-10)
    lam = np.array([0.5, 3.0, 7.0, 13.0, -4.0])
    np.testing.assert_allclose(ep_jacobi(modulus, lam), ep_series(params, lam, C_TEN), rtol=1e-10, atol=1e-12)


def test_fourier_coefficient_closed_form():
    p = 2.0 * math.pi
    assert ep_fourier_coefficient(p, 1, 0.0) == 0
    expected = 2.0 * math.pi * math.sin(math.pi / 2.0) ** 2 / math.sinh(math.pi)
    assert ep_fourier_coefficient(p, 1, math.pi) == pytest.approx(expected, rel=1e-14)
    assert abs(ep_fourier_coefficient(7.0, 3, 7.0)) < 1e-12
    with pytest.raises(ValueError):
        ep_fourier_coefficient(p, 0, 1.0)


@pytest.mark.parametrize("p,n,w", [(2.0 * math.pi, 1, math.pi), (20.0, 2, 1.0 + 0.5j), (5.0, 3, -0.7)])
def test_fourier_coefficient_against_quadrature(p, n, w):
    closed, quadrature = verify_ep_fourier_coefficient(p, n, w)
    assert quadrature == pytest.approx(closed, abs=1e-8)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_fourier_coefficient_identity_over_harmonics(n):
    for w in (0.0, 0.3, -1.2, 2.5, 6.0, 0.5 + 0.5j, -2.0 + 1.5j, 1.0 - 2.8j):
        closed, quadrature = verify_ep_fourier_coefficient(20.0, n, w)
        assert abs(quadrature - closed) <= 1e-6


# extremal functions

@pytest.fixture(scope="module")
def modulus_twenty():
    return solve_modulus_for_period(20.0)


def test_extremals_at_one(modulus_twenty):
    assert f_extremal(modulus_twenty, 1.0, "min") == pytest.approx(1.0, abs=1e-15)
    assert f_extremal(modulus_twenty, 1.0, "max") == pytest.approx(1.0, abs=1e-15)


def test_extremal_product(modulus_twenty, rng):
    x = np.exp(rng.uniform(-20.0, 20.0, 50))
    product = f_extremal(modulus_twenty, x, "min") * f_extremal(modulus_twenty, x, "max")
    np.testing.assert_allclose(product, x, rtol=1e-12)


def test_extremals_straddle_the_geometric_mean(modulus_twenty):
    f_min = f_extremal(modulus_twenty, 10.0, "min")
    f_max = f_extremal(modulus_twenty, 10.0, "max")
    assert f_min < math.sqrt(10.0) < f_max
    assert f_min == pytest.approx(math.sqrt(10.0) * math.exp(-s_star(modulus_twenty, math.log(10.0))), rel=1e-14)


def test_extremals_by_quadrature(modulus_twenty):
    x = np.array([0.01, 0.5, 3.0, 40.0, 2000.0])
    for which in ("min", "max"):
        np.testing.assert_allclose(extremal_quadrature(modulus_twenty, x, which),
                                   f_extremal(modulus_twenty, x, which), rtol=1e-7)


def test_extremals_are_square_waves(modulus_twenty):
    x = np.array([0.05, 2.0, 30.0])
    for amplitude, which in ((-0.5, "min"), (0.5, "max")):
        gen = GeneratorSpec.square_wave(20.0, amplitude)
        np.testing.assert_allclose(f_kernel_eval(gen, x, tolerance=1e-12), f_extremal(modulus_twenty, x, which),
                                   rtol=1e-8)


def test_square_wave_closed_form_matches_strip_quadrature():
    rf = build_function("square", p=20.0, amplitude=0.3)
    x = np.array([0.2, 5.0])
    by_strip = np.sqrt(x) * np.exp(np.real(rf.strip.evaluate(np.log(x))))
    np.testing.assert_allclose(rf.evaluate(x), by_strip, rtol=1e-8)


def test_extremal_membership(modulus_twenty, grid):
    for which in ("min", "max"):
        rf = ExtremalFunction(modulus_twenty, which)
        assert scaling_violation(rf, C_TEN, grid)[0] <= 1e-10
        assert symmetry_violation(rf, grid)[0] <= 1e-10


def test_extremals_tend_to_classical_means():
    near_one = EllipticModulus.from_parameter(1.0 - 1e-12, 1e-12)
    x = np.logspace(-1, 1, 33)
    np.testing.assert_allclose(f_extremal(near_one, x, "max"), 0.5 * (x + 1.0), atol=1e-4)
    np.testing.assert_allclose(f_extremal(near_one, x, "min"), 2.0 * x / (x + 1.0), atol=1e-4)


def test_extremals_across_periods():
    x = np.logspace(-3, 3, 25)
    periods = np.concatenate([np.linspace(1.0, 60.0, 120), [22.76794657762938, 24.7379, 45.42]])
    for p in periods:
        modulus = solve_modulus_for_period(p)
        f_min, f_max = f_extremal(modulus, x, "min"), f_extremal(modulus, x, "max")
        assert np.all(f_min > 0)
        np.testing.assert_allclose(f_min * f_max, x, rtol=1e-12)


def test_extremal_argument_checks(modulus_twenty):
    with pytest.raises(ValueError):
        f_extremal(modulus_twenty, 1.0, "mid")
    with pytest.raises(DomainError):
        f_extremal(modulus_twenty, 0.0, "min")


def test_extremal_combination_guard(modulus_twenty, monkeypatch):
    # dn + sqrt(m) cn > 0 holds exactly; corrupt the Jacobi values to trip the guard
    monkeypatch.setattr(EllipticModulus, "sn_cn_dn", lambda self, u: (0.0 * u, -np.ones_like(u), 0.0 * u + 0.1))
    with pytest.raises(ConsistencyError):
        s_star(modulus_twenty, np.array([1.0, 2.0]))


# membership

def test_molnar_validate_accepts_geometric(grid):
    assert molnar_validate(GeometricFunction(), 2.0, grid, seed=1, trials=20).is_valid


def test_molnar_validate_rejects_arithmetic(grid):
    report = molnar_validate(ArithmeticFunction(), 2.0, grid, seed=1, trials=20)
    assert "scaling" in report.violated_checks
    assert "normalization" not in report.violated_checks


def test_molnar_validate_accepts_sine_series(grid):
    assert molnar_validate(SineSeriesFunction(1, C_TEN), C_TEN, grid, seed=1, trials=50).is_valid


def test_molnar_validate_rejects_square():
    report = molnar_validate(CallableFunction(np.square, name="x^2"), 2.0, np.logspace(-2, 2, 9), seed=3, trials=200)
    assert {"symmetry", "scaling", "operator_monotone"} <= set(report.violated_checks)


def test_molnar_validate_arguments(grid):
    with pytest.raises(ValueError):
        molnar_validate(GeometricFunction(), 0.5, grid)
    with pytest.raises(ValueError):
        molnar_validate(GeometricFunction(), 2.0, [])
