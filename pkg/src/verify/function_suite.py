"""Molnár membership of a representing function on the scalar grid."""

from typing import Callable, List, Tuple

from ..matmean import operator_monotonicity_violation
from ..repfun import RepresentingFunction
from ..repfun.validation import normalization_violation, positivity_violation, scaling_violation, symmetry_violation
from .config import SuiteConfig
from .report import CheckResult, VerificationReport
from .suite import Suite

MAX_MONOTONE_DIM = 4


class FunctionSuite(Suite):
    """f(1) = 1, f > 0, x f(1/x) = f(x), f(c^2 x) = c f(x), the same for 1/c,
    and sampled operator monotonicity."""

    suite_name = "function"

    def __init__(self, rf: RepresentingFunction, c: float, cfg: SuiteConfig):
        super().__init__(cfg)
        if not c > 1.0:
            raise ValueError(f"type scalar must be > 1, got {c}")
        self.rf = rf
        self.c = c
        self.grid = cfg.grid.points()

    @property
    def subject(self) -> str:
        return f"{self.rf.describe()} with c={self.c:.17g}"

    def checks(self) -> List[Tuple[str, Callable[[int], CheckResult]]]:
        return [
            ("normalization", self.check_normalization),
            ("positivity", self.check_positivity),
            ("symmetry", self.check_symmetry),
            ("scaling", self.check_scaling),
            ("inverse_scaling", self.check_inverse_scaling),
            ("operator_monotone", self.check_operator_monotone),
        ]

    def check_normalization(self, index: int) -> CheckResult:
        return self.measured("normalization", normalization_violation(self.rf), witness="x=1")

    def check_positivity(self, index: int) -> CheckResult:
        worst, x = positivity_violation(self.rf, self.grid)
        return self.measured("positivity", worst, witness=f"x={x:.17g}")

    def check_symmetry(self, index: int) -> CheckResult:
        worst, x = symmetry_violation(self.rf, self.grid)
        return self.measured("symmetry", worst, witness=f"x={x:.17g}")

    def check_scaling(self, index: int) -> CheckResult:
        worst, x = scaling_violation(self.rf, self.c, self.grid)
        return self.measured("scaling", worst, witness=f"x={x:.17g}")

    def check_inverse_scaling(self, index: int) -> CheckResult:
        # M_c = M_{1/c}
        worst, x = scaling_violation(self.rf, 1.0 / self.c, self.grid)
        return self.measured("inverse_scaling", worst, witness=f"x={x:.17g}")

    def check_operator_monotone(self, index: int) -> CheckResult:
        name = "operator_monotone"
        dims = [d for d in self.cfg.matrix_dims if 2 <= d <= MAX_MONOTONE_DIM]
        if not dims:
            return CheckResult.skipped(name, self.cfg.tolerance(name), "no matrix dimension in 2..4")
        worst, witness = 0.0, ""
        for dim in dims:
            violation, pair = operator_monotonicity_violation(self.rf, self.cfg.rng(index, dim), dim, self.cfg.trials)
            if violation > worst:
                worst, witness = violation, pair
        return self.measured(name, worst, witness=witness, detail=f"{self.cfg.trials} pairs per dim {dims}")


def run_function_suite(rf: RepresentingFunction, c: float, cfg: SuiteConfig) -> VerificationReport:
    """Scalar Molnár checks plus the c <-> 1/c equivalence; deterministic given cfg.seed."""
    return FunctionSuite(rf, c, cfg).run_all_checks()
