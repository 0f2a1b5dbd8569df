"""Command-line surface."""

from .commands import (
    COMMANDS,
    build_rf,
    cmd_eval,
    cmd_extremal,
    cmd_mean,
    cmd_plot_data,
    cmd_recover,
    cmd_verify,
)
from .options import CliConfig, GridArgs, parse_scalar, parse_tolerances

__all__ = [
    "COMMANDS",
    "build_rf",
    "cmd_eval",
    "cmd_extremal",
    "cmd_mean",
    "cmd_plot_data",
    "cmd_recover",
    "cmd_verify",
    "CliConfig",
    "GridArgs",
    "parse_scalar",
    "parse_tolerances",
]
