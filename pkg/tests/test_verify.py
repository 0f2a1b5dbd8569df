import json
import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.elliptic import solve_modulus_for_period
from src.repfun import (
    ArithmeticFunction,
    CallableFunction,
    ExtremalFunction,
    FAlphaFunction,
    GeometricFunction,
    HarmonicFunction,
    SineSeriesFunction,
)
from src.verify import (
    DEFAULT_TOLERANCES,
    CheckResult,
    CheckStatus,
    GridSpec,
    SuiteConfig,
    VerificationReport,
    envelope_trend,
    run_function_suite,
    run_mean_suite,
    run_order_suite,
)

C_TEN = math.exp(10.0)


# configuration and reports

def test_suite_config_defaults():
    cfg = SuiteConfig()
    assert cfg.trials == 500
    assert cfg.matrix_dims == [2, 3, 4, 5]
    assert cfg.grid.points()[0] == pytest.approx(1e-3)
    assert cfg.grid.points()[-1] == pytest.approx(1e3)
    assert cfg.tolerance("scaling") == DEFAULT_TOLERANCES["scaling"]


def test_suite_config_seed_from_environment(monkeypatch):
    monkeypatch.setenv("MOLNAR_SEED", "99")
    assert SuiteConfig().seed == 99


def test_tolerance_overrides():
    cfg = SuiteConfig(tolerances={"scaling": 1e-3})
    assert cfg.tolerance("scaling") == 1e-3
    assert cfg.tolerance("symmetry") == 1e-10


@pytest.mark.parametrize("settings", [
    {"tolerances": {"bogus": 1e-3}},
    {"tolerances": {"scaling": 0.0}},
    {"matrix_dims": []},
    {"trials": 0},
    {"grid": {"min": 10.0, "max": 1.0}},
])
def test_suite_config_rejects(settings):
    with pytest.raises(ValidationError):
        SuiteConfig(**settings)


def test_per_trial_generators_are_order_independent():
    cfg = SuiteConfig(seed=11)
    first = cfg.rng(2, 5).standard_normal(3)
    cfg.rng(0, 0).standard_normal(100)
    np.testing.assert_array_equal(cfg.rng(2, 5).standard_normal(3), first)
    assert not np.array_equal(cfg.rng(2, 6).standard_normal(3), first)


def test_check_result_status():
    assert CheckResult.measured("scaling", 1e-11, 1e-10).status == CheckStatus.PASS
    assert CheckResult.measured("scaling", 1e-10, 1e-10).status == CheckStatus.PASS
    assert CheckResult.measured("scaling", 2e-10, 1e-10).status == CheckStatus.FAIL
    assert CheckResult.measured("scaling", math.nan, 1e-10).status == CheckStatus.FAIL
    assert CheckResult.skipped("scaling", 1e-10, "n/a").status == CheckStatus.SKIP


def test_report_outputs():
    report = VerificationReport(subject="demo", suite="function", seed=1, checks=[
        CheckResult.measured("symmetry", 0.0, 1e-10),
        CheckResult.measured("scaling", 0.5, 1e-10, witness="x=1"),
        CheckResult.skipped("operator_monotone", 1e-9, "no dims"),
    ])
    assert not report.passed
    assert report.failed_checks == ["scaling"]
    assert report.check("scaling").witness == "x=1"
    text = report.render()
    assert "✗ scaling" in text and "at x=1" in text and "FAILED: scaling" in text
    data = json.loads(report.to_json())
    assert [c["status"] for c in data["checks"]] == ["pass", "fail", "skip"]


# function suite

def test_function_suite_geometric(small_suite):
    report = run_function_suite(GeometricFunction(), 2.0, small_suite)
    assert report.passed, report.render()
    assert [c.name for c in report.checks] == ["normalization", "positivity", "symmetry", "scaling",
                                               "inverse_scaling", "operator_monotone"]


def test_function_suite_arithmetic_fails_scaling(small_suite):
    report = run_function_suite(ArithmeticFunction(), 2.0, small_suite)
    assert "scaling" in report.failed_checks
    assert "inverse_scaling" in report.failed_checks
    assert report.check("scaling").witness.startswith("x=")
    assert report.check("normalization").status == CheckStatus.PASS


def test_function_suite_extremal(small_suite):
    rf = ExtremalFunction(solve_modulus_for_period(20.0), "min")
    report = run_function_suite(rf, C_TEN, small_suite)
    assert report.passed, report.render()


def test_function_suite_skips_large_dims(small_suite):
    cfg = small_suite.model_copy(update={"matrix_dims": [6]})
    report = run_function_suite(GeometricFunction(), 2.0, cfg)
    assert report.check("operator_monotone").status == CheckStatus.SKIP
    assert report.passed


def test_function_suite_records_errors(small_suite):
    def broken(x):
        raise RuntimeError("evaluation failed")

    report = run_function_suite(CallableFunction(broken, name="broken"), 2.0, small_suite)
    check = report.check("normalization")
    assert check.status == CheckStatus.FAIL
    assert check.worst_violation == math.inf
    assert check.detail.startswith("RuntimeError")
    assert len(report.checks) == 6


def test_function_suite_rejects_type_scalar(small_suite):
    with pytest.raises(ValueError):
        run_function_suite(GeometricFunction(), 1.0, small_suite)


# mean suite

def test_mean_suite_geometric(small_suite):
    report = run_mean_suite(GeometricFunction(), small_suite)
    assert report.passed, report.render()
    assert report.check("geometric_closed_form").status == CheckStatus.PASS
    assert report.check("upper_semicontinuity").detail.startswith("largest final gap")


def test_mean_suite_falpha(small_suite):
    report = run_mean_suite(FAlphaFunction(0.5), small_suite)
    assert report.passed, report.render()
    assert report.check("geometric_closed_form").status == CheckStatus.SKIP


def test_mean_suite_catches_square(small_suite):
    cfg = small_suite.model_copy(update={"trials": 50})
    report = run_mean_suite(CallableFunction(np.square, name="x^2"), cfg)
    assert "operator_monotone" in report.failed_checks
    assert report.check("operator_monotone").witness.startswith("A=")


@pytest.mark.parametrize("rf", [GeometricFunction(), HarmonicFunction(), ArithmeticFunction(),
                                SineSeriesFunction(1, C_TEN)], ids=lambda rf: rf.kind)
def test_mean_suite_with_full_dimension_range(rf):
    report = run_mean_suite(rf, SuiteConfig(trials=200, seed=20240601))
    assert report.passed, report.render()


def test_mean_suite_is_deterministic(small_suite):
    first = run_mean_suite(GeometricFunction(), small_suite)
    second = run_mean_suite(GeometricFunction(), small_suite)
    assert [c.worst_violation for c in first.checks] == [c.worst_violation for c in second.checks]


# order suite

def test_order_suite_period_twenty(small_suite):
    report = run_order_suite(20.0, small_suite)
    assert report.passed, report.render()
    assert len(report.checks) == 10
    assert "smallest relative margin" in report.check("sandwich").detail


def test_order_suite_where_the_landen_ladder_settles_one_ulp_apart(small_suite):
    report = run_order_suite(22.76794657762938, small_suite)
    assert report.passed, report.render()


def test_order_suite_short_period():
    cfg = SuiteConfig(grid=GridSpec(count=12, min=0.1, max=10.0), matrix_dims=[2], trials=2, seed=3)
    assert run_order_suite(4.0 * math.pi, cfg).passed


def test_envelope_widens_with_period():
    trend = envelope_trend([25.0, 10.0, 20.0, 15.0], np.logspace(-3, 3, 41))
    assert trend.widening
    assert all(r >= 1.0 for r in trend.max_ratio)
    assert all(r <= 1.0 for r in trend.min_ratio)
