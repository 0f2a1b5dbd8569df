"""Sup-norm validation of generator specs."""

from typing import Tuple

import numpy as np
from loguru import logger

from ..core.report import Finding, ValidationReport
from .spec import GeneratorSpec, evaluate

SUP_BOUND = 0.5
SUP_SLACK = 1e-12
GRID_POINTS_PER_PERIOD = 4096


def grid_sup_norm(spec: GeneratorSpec, points_per_period: int = GRID_POINTS_PER_PERIOD) -> Tuple[float, float]:
    """Grid proxy for ||Psi||_inf over one period; returns (sup, witness lambda).

    With at most 64 harmonics the 4096-point grid has at least 64 samples per
    shortest wavelength.
    """
    lam = np.linspace(0.0, spec.period, points_per_period, endpoint=False)
    values = np.abs(evaluate(spec, lam))
    idx = int(np.argmax(values))
    return float(values[idx]), float(lam[idx])


def validate(spec: GeneratorSpec) -> ValidationReport:
    """List every violated generator constraint; an empty report means accepted.

    Never raises for violations.
    """
    report = ValidationReport(subject=f"generator {spec.describe()}")

    if spec.form == "square_wave":
        if abs(spec.amplitude) > SUP_BOUND:
            report.add(Finding(
                check_name="sup_norm",
                message=f"|amplitude| = {abs(spec.amplitude):g} exceeds 1/2",
                witness=0.25 * spec.period,
                details={"sup": abs(spec.amplitude)},
            ))

    elif spec.form == "fourier":
        absolute_sum = float(np.sum(np.abs(spec.coefficients)))
        if absolute_sum <= SUP_BOUND:
            # sum |B_n| bounds the sup: sufficient, no grid needed
            logger.trace(f"{spec.describe()}: sum |B_n| = {absolute_sum:.6g} <= 1/2")
        else:
            sup, witness = grid_sup_norm(spec)
            if sup > SUP_BOUND + SUP_SLACK:
                report.add(Finding(
                    check_name="sup_norm",
                    message=f"grid sup |Psi| = {sup:.12g} exceeds 1/2",
                    witness=witness,
                    details={"sup": sup, "grid_points": GRID_POINTS_PER_PERIOD},
                ))

    if not report.is_valid:
        logger.debug(report.render())
    return report
