"""Property suites for representing functions, means and the order structure."""

from .config import DEFAULT_TOLERANCES, GridSpec, SuiteConfig
from .function_suite import FunctionSuite, run_function_suite
from .mean_suite import MeanSuite, run_mean_suite
from .order_suite import EnvelopeTrend, OrderSuite, envelope_trend, run_order_suite
from .report import CheckResult, CheckStatus, VerificationReport

__all__ = [
    "DEFAULT_TOLERANCES",
    "GridSpec",
    "SuiteConfig",
    "FunctionSuite",
    "run_function_suite",
    "MeanSuite",
    "run_mean_suite",
    "EnvelopeTrend",
    "OrderSuite",
    "envelope_trend",
    "run_order_suite",
    "CheckResult",
    "CheckStatus",
    "VerificationReport",
]
