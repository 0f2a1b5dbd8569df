"""Main entry point for the Molnár means toolkit."""

import argparse
import sys
from contextlib import nullcontext
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError

from src.cli.commands import COMMANDS
from src.cli.options import DEFAULT_GRID, CliConfig, GridArgs, parse_scalar, parse_tolerances
from src.core.config import Config
from src.core.errors import (
    ConsistencyError,
    ConvergenceError,
    DomainError,
    InvalidGeneratorError,
    PrecisionLossError,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_NUMERICAL_ERROR = 3


def setup_logging(log_level: str = "INFO", log_file: Optional[str] = None):
    # stdout carries CSV and reports
    logger.remove()
    logger.add(sys.stderr, format="<green>{time:HH:mm:ss}</green> | <level>{message}</level>", level=log_level)
    if log_file:
        logger.add(log_file, level="DEBUG", rotation="10 MB")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="molnar", description="Molnár means: evaluation, verification and figure data")
    sub = parser.add_subparsers(dest="command", required=True)

    function_source = argparse.ArgumentParser(add_help=False)
    function_source.add_argument("--generator", help="JSON generator document")
    function_source.add_argument("--kind", help="geometric, arithmetic, harmonic, fn, falpha, fmin, fmax, square "
                                                "(parallel_sum for mean)")
    function_source.add_argument("--n", type=int, help="harmonic index of fn")
    function_source.add_argument("--c", type=parse_scalar, help="type scalar, e.g. 2 or e10")
    function_source.add_argument("--alpha", type=float, help="parameter of falpha")
    function_source.add_argument("--amplitude", type=float, help="square-wave amplitude")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=float, nargs="+", default=[], help="period(s)")
    common.add_argument("--grid", default=DEFAULT_GRID, help="min:max:points_per_decade")
    common.add_argument("--seed", type=int, help="seed override (default from MOLNAR_SEED)")
    common.add_argument("--output", help="write to this file instead of stdout")

    sub.add_parser("eval", parents=[function_source, common], help="tabulate f over the grid")
    sub.add_parser("extremal", parents=[common], help="tabulate f_min and f_max relative to sqrt(x)")

    plot = sub.add_parser("plot-data", parents=[common], help="figure data")
    plot.add_argument("--figure", choices=["fminmax", "envelope"], default="fminmax")

    mean = sub.add_parser("mean", parents=[function_source, common], help="Kubo-Ando mean of two matrices")
    mean.add_argument("--a", required=True, help="matrix file; positive definite unless --regularize")
    mean.add_argument("--b", required=True, help="matrix file; positive semidefinite")
    mean.add_argument("--regularize", action="store_true", help="semidefinite inputs via the eps schedule")

    verify = sub.add_parser("verify", parents=[function_source, common], help="run a verification suite")
    verify.add_argument("--suite", choices=["function", "mean", "order"], required=True)
    verify.add_argument("--trials", type=int)
    verify.add_argument("--dims", type=int, nargs="+")
    verify.add_argument("--tol", action="append", help="tolerance override name=value (repeatable)")
    verify.add_argument("--format", choices=["text", "json"], default="text", dest="report_format")

    sub.add_parser("recover", parents=[function_source, common], help="recover Psi from its strip function")
    return parser


def to_config(args: argparse.Namespace) -> CliConfig:
    values = vars(args).copy()
    values["generator_file"] = values.pop("generator", None)
    values["grid"] = GridArgs.parse(values["grid"])
    values["tolerances"] = parse_tolerances(values.pop("tol", None))
    return CliConfig(**{k: v for k, v in values.items() if v is not None})


def run(cfg: CliConfig) -> int:
    target = open(cfg.output, "w", newline="") if cfg.output else nullcontext(sys.stdout)
    with target as out:
        return COMMANDS[cfg.command](cfg, out)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        config = Config.load()
        setup_logging(config.log_level, config.log_file)
        if getattr(args, "seed", None) is None:
            args.seed = config.seed
        cfg = to_config(args)
        logger.debug(f"molnar {cfg.command}: {cfg.model_dump(exclude_defaults=True)}")
        return run(cfg)

    except (DomainError, PrecisionLossError, ConvergenceError, ConsistencyError) as e:
        logger.error(f"❌ Numerical error: {e}")
        return EXIT_NUMERICAL_ERROR
    except InvalidGeneratorError as e:
        logger.error(f"❌ Invalid generator:\n{e}")
        return EXIT_CONFIG_ERROR
    except (ValidationError, ValueError, OSError) as e:
        logger.error(f"❌ Configuration error: {e}")
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
