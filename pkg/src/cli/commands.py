"""Subcommand implementations. Each returns an exit code and writes its table,
matrix or report to the given stream."""

import math
from typing import TextIO

import numpy as np
import pandas as pd
from loguru import logger

from ..core.config import Config
from ..generator import GeneratorSpec, evaluate
from ..matmean import classical_mean, kubo_ando_mean, read_matrix, regularized_mean, write_matrix
from ..repfun import (
    ArithmeticFunction,
    HarmonicFunction,
    RepresentingFunction,
    SineSeriesFunction,
    StripFunction,
    build_function,
    f_eval,
    f_extremal,
    psi_recover,
)
from ..elliptic import solve_modulus_for_period
from ..verify import GridSpec, SuiteConfig, run_function_suite, run_mean_suite, run_order_suite
from .options import CliConfig

FLOAT_FORMAT = "%.17g"
RECOVERY_POINTS = 64
EXCLUSION_HALF_WIDTH = 0.05


def write_table(frame: pd.DataFrame, out: TextIO) -> None:
    frame.to_csv(out, index=False, float_format=FLOAT_FORMAT)


def build_rf(cfg: CliConfig) -> RepresentingFunction:
    """The function named by --generator or --kind."""
    tolerance = Config.get().tolerance
    if cfg.generator_file is not None:
        gen = GeneratorSpec.from_file(cfg.generator_file)
        logger.info(f"Loaded {gen.describe()} from {cfg.generator_file}")
        return build_function("generator", generator=gen, tolerance=tolerance)
    return build_function(cfg.kind, n=cfg.n, c=cfg.c, alpha=cfg.alpha, p=cfg.p[0] if cfg.p else None,
                          amplitude=cfg.amplitude, tolerance=tolerance)


def cmd_eval(cfg: CliConfig, out: TextIO) -> int:
    """CSV x, f(x), f(x)/sqrt(x) over the grid."""
    rf = build_rf(cfg)
    x = cfg.grid.points()
    values = np.asarray(f_eval(rf, x), dtype=float)
    write_table(pd.DataFrame({"x": x, "f(x)": values, "f(x)/sqrt(x)": values / np.sqrt(x)}), out)
    return 0


def _extremal_ratios(p: float, x: np.ndarray):
    modulus = solve_modulus_for_period(p)
    root = np.sqrt(x)
    return (np.asarray(f_extremal(modulus, x, "min")) / root,
            np.asarray(f_extremal(modulus, x, "max")) / root)


def cmd_extremal(cfg: CliConfig, out: TextIO) -> int:
    """CSV x, f_min/sqrt(x), f_max/sqrt(x); one column pair per period when several are given."""
    x = cfg.grid.points()
    columns = {"x": x}
    for p in cfg.p:
        low, high = _extremal_ratios(p, x)
        suffix = "" if len(cfg.p) == 1 else f"[p={p:g}]"
        columns[f"f_min/sqrt(x){suffix}"] = low
        columns[f"f_max/sqrt(x){suffix}"] = high
    write_table(pd.DataFrame(columns), out)
    return 0


def cmd_plot_data(cfg: CliConfig, out: TextIO) -> int:
    """Figure data: `fminmax` (extremals with f_1 between them) or `envelope`
    (extremals for several periods with the harmonic and arithmetic envelopes)."""
    x = cfg.grid.points()
    root = np.sqrt(x)
    if cfg.figure == "fminmax":
        p = cfg.p[0]
        low, high = _extremal_ratios(p, x)
        f_1 = SineSeriesFunction(1, math.exp(0.5 * p))
        frame = pd.DataFrame({"x": x, "fmin/sqrt(x)": low,
                              "f1/sqrt(x)": np.asarray(f_1.evaluate(x)) / root, "fmax/sqrt(x)": high})
    else:
        columns = {"x": x}
        for p in cfg.p:
            low, high = _extremal_ratios(p, x)
            columns[f"fmin/sqrt(x)[p={p:g}]"] = low
            columns[f"fmax/sqrt(x)[p={p:g}]"] = high
        columns["harmonic/sqrt(x)"] = np.asarray(HarmonicFunction().evaluate(x)) / root
        columns["arithmetic/sqrt(x)"] = np.asarray(ArithmeticFunction().evaluate(x)) / root
        frame = pd.DataFrame(columns)
    write_table(frame, out)
    return 0


def cmd_mean(cfg: CliConfig, out: TextIO) -> int:
    """Mean of the matrices in --a and --b, in the matrix text format.

    A must be positive definite unless --regularize is given; B may always
    be semidefinite.
    """
    a = read_matrix(cfg.a, semidefinite=cfg.regularize)
    b = read_matrix(cfg.b, semidefinite=True)

    if cfg.kind == "parallel_sum":
        result = classical_mean("parallel_sum", a, b)
    elif cfg.regularize:
        result = regularized_mean(build_rf(cfg), a, b).mean
    else:
        result = kubo_ando_mean(build_rf(cfg), a, b)
    write_matrix(result, out)
    return 0


def suite_config(cfg: CliConfig) -> SuiteConfig:
    settings = {"tolerances": cfg.tolerances, "grid": GridSpec(count=64)}
    if cfg.trials is not None:
        settings["trials"] = cfg.trials
    if cfg.dims is not None:
        settings["matrix_dims"] = cfg.dims
    if cfg.seed is not None:
        settings["seed"] = cfg.seed
    return SuiteConfig(**settings)


def cmd_verify(cfg: CliConfig, out: TextIO) -> int:
    """Run one suite; exit 0 iff every check passes."""
    suite_cfg = suite_config(cfg)
    if cfg.suite == "order":
        reports = [run_order_suite(p, suite_cfg) for p in cfg.p]
    else:
        rf = build_rf(cfg)
        if cfg.suite == "mean":
            reports = [run_mean_suite(rf, suite_cfg)]
        else:
            c = cfg.c if cfg.c is not None else rf.period_c
            if c is None:
                raise ValueError(f"{rf.describe()} has no type scalar; pass --c")
            reports = [run_function_suite(rf, max(c, 1.0 / c), suite_cfg)]

    for report in reports:
        out.write((report.to_json() if cfg.report_format == "json" else report.render()) + "\n")
        if not report.passed:
            logger.error(f"{report.suite} suite failed for {report.subject}: {', '.join(report.failed_checks)}")
    return 0 if all(report.passed for report in reports) else 1


def _in_exclusion(gen: GeneratorSpec, lam: float) -> bool:
    """Within 0.05 p of a jump at a multiple of p/2 (square waves only)."""
    if gen.form != "square_wave":
        return False
    half = 0.5 * gen.period
    offset = lam % half
    return min(offset, half - offset) < EXCLUSION_HALF_WIDTH * gen.period


def cmd_recover(cfg: CliConfig, out: TextIO) -> int:
    """CSV lambda, psi_true, psi_recovered, abs_err over one period."""
    gen = GeneratorSpec.from_file(cfg.generator_file)
    sf = StripFunction.for_generator(gen, Config.get().tolerance)
    lam = np.linspace(0.0, gen.period, RECOVERY_POINTS, endpoint=False)

    truth = np.asarray(evaluate(gen, lam), dtype=float)
    recovered = np.array([psi_recover(sf, float(v), strict=not _in_exclusion(gen, float(v))) for v in lam])
    write_table(pd.DataFrame({"lambda": lam, "psi_true": truth, "psi_recovered": recovered,
                              "abs_err": np.abs(recovered - truth)}), out)
    return 0


COMMANDS = {
    "eval": cmd_eval,
    "extremal": cmd_extremal,
    "plot-data": cmd_plot_data,
    "mean": cmd_mean,
    "verify": cmd_verify,
    "recover": cmd_recover,
}
