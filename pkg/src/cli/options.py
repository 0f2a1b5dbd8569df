"""Command-line configuration: flag parsing helpers and the validated CliConfig."""

import math
import re
from pathlib import Path
from typing import Dict, List, Literal, Optional

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator
from typing_extensions import Self

Command = Literal["eval", "mean", "verify", "plot-data", "extremal", "recover"]
Suite = Literal["function", "mean", "order"]
Figure = Literal["fminmax", "envelope"]

FUNCTION_KINDS = ("geometric", "arithmetic", "harmonic", "fn", "falpha", "fmin", "fmax", "square")
MEAN_ONLY_KINDS = ("parallel_sum",)
DEFAULT_GRID = "1e-3:1e3:10"

_E_SHORTHAND = re.compile(r"^e\^?\(?([-+]?[0-9.]+(?:[eE][-+]?[0-9]+)?)\)?$")


def parse_scalar(text: str) -> float:
    """A float, or `e10` / `e^10` shorthand for e^10."""
    text = text.strip()
    match = _E_SHORTHAND.match(text)
    if match:
        return math.exp(float(match.group(1)))
    return float(text)


class GridArgs(BaseModel):
    """`min:max:points_per_decade`, log-spaced."""
    min: float = Field(..., gt=0)
    max: float = Field(..., gt=0)
    points_per_decade: int = Field(..., ge=1)

    @model_validator(mode="after")
    def check_range(self) -> Self:
        if not self.max > self.min:
            raise ValueError(f"grid max {self.max} must exceed min {self.min}")
        return self

    @classmethod
    def parse(cls, text: str) -> "GridArgs":
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid must look like min:max:points_per_decade, got '{text}'")
        return cls(min=parse_scalar(parts[0]), max=parse_scalar(parts[1]), points_per_decade=int(parts[2]))

    def points(self) -> np.ndarray:
        decades = math.log10(self.max) - math.log10(self.min)
        count = max(2, int(round(decades * self.points_per_decade)) + 1)
        return np.logspace(math.log10(self.min), math.log10(self.max), count)


def parse_tolerances(items: Optional[List[str]]) -> Dict[str, float]:
    """`name=value` pairs."""
    tolerances: Dict[str, float] = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"tolerance override must look like name=value, got '{item}'")
        tolerances[name.strip()] = float(value)
    return tolerances


class CliConfig(BaseModel):
    """One validated invocation."""

    command: Command
    generator_file: Optional[Path] = None
    kind: Optional[str] = None
    n: Optional[int] = None
    c: Optional[float] = None
    alpha: Optional[float] = None
    p: List[float] = Field(default_factory=list)
    amplitude: Optional[float] = None
    grid: GridArgs = Field(default_factory=lambda: GridArgs.parse(DEFAULT_GRID))
    a: Optional[Path] = None
    b: Optional[Path] = None
    regularize: bool = False
    suite: Optional[Suite] = None
    figure: Figure = "fminmax"
    trials: Optional[int] = Field(default=None, ge=1)
    dims: Optional[List[int]] = None
    seed: Optional[int] = Field(default=None, ge=0)
    tolerances: Dict[str, float] = Field(default_factory=dict)
    report_format: Literal["text", "json"] = "text"
    output: Optional[Path] = None

    @field_validator("kind")
    @classmethod
    def validate_kind(cls, v: Optional[str]) -> Optional[str]:
        if v is not None and v not in FUNCTION_KINDS + MEAN_ONLY_KINDS:
            raise ValueError(f"Unknown kind '{v}'; choose from {', '.join(FUNCTION_KINDS + MEAN_ONLY_KINDS)}")
        return v

    @field_validator("p")
    @classmethod
    def validate_periods(cls, v: List[float]) -> List[float]:
        if any(not p > 0 for p in v):
            raise ValueError("periods must be > 0")
        return v

    @property
    def needs_function(self) -> bool:
        if self.command in ("eval", "mean"):
            return True
        return self.command == "verify" and self.suite in ("function", "mean")

    @model_validator(mode="after")
    def check_sources(self) -> Self:
        if self.needs_function and (self.generator_file is None) == (self.kind is None):
            raise ValueError("give exactly one function source: --generator or --kind")
        if self.kind in MEAN_ONLY_KINDS and self.command != "mean":
            raise ValueError(f"kind '{self.kind}' is only available to the mean command")
        if self.command == "verify" and self.suite is None:
            raise ValueError("verify needs --suite")
        if self.command in ("extremal", "plot-data") and not self.p:
            raise ValueError(f"{self.command} needs --p")
        if self.command == "verify" and self.suite == "order" and not self.p:
            raise ValueError("the order suite needs --p")
        if self.command == "mean" and (self.a is None or self.b is None):
            raise ValueError("mean needs --a and --b matrix files")
        if self.command == "recover" and self.generator_file is None:
            raise ValueError("recover needs --generator")
        return self
