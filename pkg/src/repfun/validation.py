"""Molnár membership checks for representing functions.

The scalar checks return (worst relative violation, witness x) so the
verification suites can reuse them with their own tolerances.
"""

from typing import Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from ..core.config import Config
from ..core.report import Finding, ValidationReport
from ..matmean.sampling import operator_monotonicity_violation
from .base import RepresentingFunction

NORMALIZATION_TOLERANCE = 1e-12
IDENTITY_TOLERANCE = 1e-10
MONOTONE_TOLERANCE = 1e-9
MONOTONE_TRIALS = 200

ScalarCheck = Tuple[float, Optional[float]]


def _worst(violation: np.ndarray, grid: np.ndarray) -> ScalarCheck:
    violation = np.where(np.isfinite(violation), violation, np.inf)
    idx = int(np.argmax(violation))
    return float(violation[idx]), float(grid[idx])


def normalization_violation(rf: RepresentingFunction) -> float:
    """|f(1) - 1|."""
    return abs(float(rf.evaluate(1.0)) - 1.0)


def positivity_violation(rf: RepresentingFunction, grid: Sequence[float]) -> ScalarCheck:
    """0 when f > 0 on the grid; otherwise 1 + |f(x)| at the worst non-positive value."""
    grid = np.asarray(grid, dtype=float)
    values = np.asarray(rf.evaluate(grid), dtype=float)
    violation = np.where(values > 0, 0.0, 1.0 + np.abs(values))
    return _worst(violation, grid)


def symmetry_violation(rf: RepresentingFunction, grid: Sequence[float]) -> ScalarCheck:
    """max |x f(1/x) - f(x)| / |f(x)|."""
    grid = np.asarray(grid, dtype=float)
    direct = np.asarray(rf.evaluate(grid), dtype=float)
    mirrored = grid * np.asarray(rf.evaluate(1.0 / grid), dtype=float)
    return _worst(np.abs(mirrored - direct) / np.abs(direct), grid)


def scaling_violation(rf: RepresentingFunction, c: float, grid: Sequence[float]) -> ScalarCheck:
    """max |f(c^2 x) - c f(x)| / |c f(x)|; pass 1/c for the inverse scaling."""
    grid = np.asarray(grid, dtype=float)
    expected = c * np.asarray(rf.evaluate(grid), dtype=float)
    scaled = np.asarray(rf.evaluate(c * c * grid), dtype=float)
    return _worst(np.abs(scaled - expected) / np.abs(expected), grid)


def molnar_validate(rf: RepresentingFunction, c: float, grid: Sequence[float],
                    seed: Optional[int] = None, trials: int = MONOTONE_TRIALS) -> ValidationReport:
    """Check f(1) = 1, x f(1/x) = f(x), f(c^2 x) = c f(x) on the grid and
    operator monotonicity on sampled 2x2 pairs A <= B.

    The matrix sampling is a necessary condition only. Never raises for
    violations; an empty report means every check passed.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        raise ValueError("grid must be nonempty")
    if not c > 1.0:
        raise ValueError(f"type scalar must be > 1, got {c}")
    report = ValidationReport(subject=f"{rf.describe()} as Molnár function of type c={c:.17g}")

    error = normalization_violation(rf)
    if error > NORMALIZATION_TOLERANCE:
        report.add(Finding(check_name="normalization", message=f"|f(1) - 1| = {error:.3e}",
                           witness=1.0, details={"violation": error}))

    low, witness = positivity_violation(rf, grid)
    if low > 0:
        report.add(Finding(check_name="positivity", message="f(x) <= 0", witness=witness))

    checks = (
        ("symmetry", "x f(1/x) != f(x)", symmetry_violation(rf, grid)),
        ("scaling", "f(c^2 x) != c f(x)", scaling_violation(rf, c, grid)),
    )
    for name, label, (error, witness) in checks:
        if error > IDENTITY_TOLERANCE:
            report.add(Finding(check_name=name, message=f"{label}: relative error {error:.3e}",
                               witness=witness, details={"violation": error}))

    rng = np.random.default_rng([Config.get().seed if seed is None else seed, 0])
    error, detail = operator_monotonicity_violation(rf, rng, dim=2, trials=trials)
    if error > MONOTONE_TOLERANCE:
        report.add(Finding(check_name="operator_monotone",
                           message=f"f(B) - f(A) has a negative eigenvalue for A <= B: {detail}",
                           details={"violation": error}))

    logger.debug(report.render())
    return report
