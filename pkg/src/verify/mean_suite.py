"""Kubo-Ando axioms for the mean of a representing function, on random matrices."""

from typing import Callable, Iterator, List, Tuple

import numpy as np

from ..matmean import (
    PosDefMatrix,
    classical_mean,
    kubo_ando_mean,
    loewner_violation,
    operator_monotonicity_violation,
    random_hermitian,
    random_psd_increment,
    random_rank_deficient,
    random_spd,
    regularized_mean,
)
from ..matmean.sampling import describe_matrix
from ..repfun import RepresentingFunction
from .config import SuiteConfig
from .report import CheckResult, VerificationReport
from .suite import Suite

SEMICONTINUITY_TRIAL_DIVISOR = 25


class MeanSuite(Suite):
    """Symmetry, normalization, joint monotonicity, transformer inequality,
    scalar consistency, sandwich between harmonic and arithmetic means,
    operator monotonicity of f and upper semicontinuity."""

    suite_name = "mean"

    def __init__(self, rf: RepresentingFunction, cfg: SuiteConfig):
        super().__init__(cfg)
        self.rf = rf

    @property
    def subject(self) -> str:
        return self.rf.describe()

    def checks(self) -> List[Tuple[str, Callable[[int], CheckResult]]]:
        return [
            ("mean_symmetry", self.check_symmetry),
            ("mean_normalization", self.check_normalization),
            ("joint_monotonicity", self.check_joint_monotonicity),
            ("transformer", self.check_transformer),
            ("scalar_consistency", self.check_scalar_consistency),
            ("matrix_sandwich", self.check_sandwich),
            ("operator_monotone", self.check_operator_monotone),
            ("upper_semicontinuity", self.check_upper_semicontinuity),
            ("geometric_closed_form", self.check_geometric_closed_form),
        ]

    def _trials(self, index: int, trials: int = 0) -> Iterator[Tuple[int, np.random.Generator]]:
        """(dim, rng) for every trial of every matrix dimension."""
        trials = trials or self.cfg.trials
        for dim in self.cfg.matrix_dims:
            for trial in range(trials):
                yield dim, self.cfg.rng(index, dim * 1_000_000 + trial)

    def _mean(self, a: PosDefMatrix, b: PosDefMatrix) -> np.ndarray:
        return kubo_ando_mean(self.rf, a, b).entries

    def check_symmetry(self, index: int) -> CheckResult:
        worst, witness = 0.0, ""
        for dim, rng in self._trials(index):
            a, b = random_spd(rng, dim), random_spd(rng, dim)
            gap = np.linalg.norm(self._mean(a, b) - self._mean(b, a), 2) / (a.norm + b.norm)
            if gap > worst:
                worst, witness = gap, f"A={describe_matrix(a.entries)} B={describe_matrix(b.entries)}"
        return self.measured("mean_symmetry", worst, witness=witness)

    def check_normalization(self, index: int) -> CheckResult:
        worst, witness = 0.0, ""
        for dim in self.cfg.matrix_dims:
            identity = PosDefMatrix.identity(dim)
            gap = float(np.max(np.abs(self._mean(identity, identity) - np.eye(dim))))
            if gap > worst:
                worst, witness = gap, f"dim={dim}"
        return self.measured("mean_normalization", worst, witness=witness)

    def check_joint_monotonicity(self, index: int) -> CheckResult:
        worst, witness = 0.0, ""
        for dim, rng in self._trials(index):
            a, b = random_spd(rng, dim), random_spd(rng, dim)
            c = PosDefMatrix.from_array(a.entries + random_psd_increment(rng, dim))
            d = PosDefMatrix.from_array(b.entries + random_psd_increment(rng, dim))
            gap = loewner_violation(self._mean(c, d), self._mean(a, b), c.norm + d.norm)
            if gap > worst:
                worst = gap
                witness = (f"A={describe_matrix(a.entries)} B={describe_matrix(b.entries)} "
                           f"C={describe_matrix(c.entries)} D={describe_matrix(d.entries)}")
        return self.measured("joint_monotonicity", worst, witness=witness)

    def check_transformer(self, index: int) -> CheckResult:
        worst, witness = 0.0, ""
        for dim, rng in self._trials(index):
            a, b = random_spd(rng, dim), random_spd(rng, dim)
            c = random_hermitian(rng, dim)
            ca = PosDefMatrix.from_array(c @ a.entries @ c)
            cb = PosDefMatrix.from_array(c @ b.entries @ c)
            c_norm = float(np.linalg.norm(c, 2))
            gap = loewner_violation(self._mean(ca, cb), c @ self._mean(a, b) @ c, c_norm ** 2 * (a.norm + b.norm))
            if gap > worst:
                worst = gap
                witness = (f"A={describe_matrix(a.entries)} B={describe_matrix(b.entries)} "
                           f"C={describe_matrix(c)}")
        return self.measured("transformer", worst, witness=witness)

    def check_scalar_consistency(self, index: int) -> CheckResult:
        rng = self.cfg.rng(index)
        low, high = np.log(self.cfg.grid.min), np.log(self.cfg.grid.max)
        x, y = np.exp(rng.uniform(low, high, self.cfg.trials)), np.exp(rng.uniform(low, high, self.cfg.trials))
        worst, witness = 0.0, ""
        for xi, yi in zip(x, y):
            expected = xi * float(self.rf.evaluate(yi / xi))
            value = float(self._mean(PosDefMatrix.diag([xi]), PosDefMatrix.diag([yi]))[0, 0].real)
            gap = abs(value - expected) / abs(expected)
            if gap > worst:
                worst, witness = gap, f"x={xi:.17g} y={yi:.17g}"
        return self.measured("scalar_consistency", worst, witness=witness)

    def check_sandwich(self, index: int) -> CheckResult:
        worst, witness = 0.0, ""
        for dim, rng in self._trials(index):
            a, b = random_spd(rng, dim), random_spd(rng, dim)
            mean = self._mean(a, b)
            scale = a.norm + b.norm
            gap = max(
                loewner_violation(classical_mean("arithmetic", a, b).entries, mean, scale),
                loewner_violation(mean, classical_mean("harmonic", a, b).entries, scale),
            )
            if gap > worst:
                worst, witness = gap, f"A={describe_matrix(a.entries)} B={describe_matrix(b.entries)}"
        return self.measured("matrix_sandwich", worst, witness=witness)

    def check_operator_monotone(self, index: int) -> CheckResult:
        worst, witness = 0.0, ""
        for dim in self.cfg.matrix_dims:
            violation, pair = operator_monotonicity_violation(self.rf, self.cfg.rng(index, dim), dim, self.cfg.trials)
            if violation > worst:
                worst, witness = violation, pair
        return self.measured("operator_monotone", worst, witness=witness)

    def check_upper_semicontinuity(self, index: int) -> CheckResult:
        """(A + eps I) sigma (B + eps I) must decrease as eps decreases, for singular A, B."""
        name = "upper_semicontinuity"
        trials = max(1, self.cfg.trials // SEMICONTINUITY_TRIAL_DIVISOR)
        worst, witness, final_gaps = 0.0, "", []
        for dim, rng in self._trials(index, trials):
            if dim < 2:
                continue
            a, b = random_rank_deficient(rng, dim), random_rank_deficient(rng, dim)
            result = regularized_mean(self.rf, a, b)
            final_gaps.append(result.final_gap)
            scale = a.norm + b.norm
            for earlier, later in zip(result.iterates, result.iterates[1:]):
                gap = loewner_violation(earlier.entries, later.entries, scale)
                if gap > worst:
                    worst, witness = gap, f"A={describe_matrix(a.entries)} B={describe_matrix(b.entries)}"
        if not final_gaps:
            return CheckResult.skipped(name, self.cfg.tolerance(name), "needs matrix dimension >= 2")
        return self.measured(name, worst, witness=witness, detail=f"largest final gap {max(final_gaps):.3e}")

    def check_geometric_closed_form(self, index: int) -> CheckResult:
        name = "geometric_closed_form"
        if self.rf.kind != "geometric":
            return CheckResult.skipped(name, self.cfg.tolerance(name), "applies to the geometric mean only")
        worst, witness = 0.0, ""
        for dim, rng in self._trials(index):
            a, b = random_spd(rng, dim), random_spd(rng, dim)
            gap = np.linalg.norm(self._mean(a, b) - classical_mean("geometric", a, b).entries, 2) / (a.norm + b.norm)
            if gap > worst:
                worst, witness = gap, f"A={describe_matrix(a.entries)} B={describe_matrix(b.entries)}"
        return self.measured(name, worst, witness=witness)


def run_mean_suite(rf: RepresentingFunction, cfg: SuiteConfig) -> VerificationReport:
    """Kubo-Ando axiom battery over cfg.trials random instances per matrix dimension."""
    return MeanSuite(rf, cfg).run_all_checks()
