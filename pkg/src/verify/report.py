"""Verification reports: one result per named check."""

import math
from enum import Enum
from typing import List

from pydantic import BaseModel, Field


class CheckStatus(str, Enum):
    """Outcome of a single check."""
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"   # Check does not apply to this subject


class CheckResult(BaseModel):
    """Worst observed violation of one property against its tolerance."""
    name: str
    status: CheckStatus
    worst_violation: float
    tolerance: float
    witness: str = ""
    detail: str = ""

    @classmethod
    def measured(cls, name: str, worst: float, tolerance: float, witness: str = "", detail: str = "") -> "CheckResult":
        """Pass exactly when worst <= tolerance; non-finite violations fail."""
        passed = math.isfinite(worst) and worst <= tolerance
        return cls(name=name, status=CheckStatus.PASS if passed else CheckStatus.FAIL,
                   worst_violation=worst, tolerance=tolerance, witness=witness, detail=detail)

    @classmethod
    def skipped(cls, name: str, tolerance: float, reason: str) -> "CheckResult":
        return cls(name=name, status=CheckStatus.SKIP, worst_violation=0.0, tolerance=tolerance, detail=reason)


class VerificationReport(BaseModel):
    """All checks of one suite run on one subject."""
    subject: str
    suite: str
    seed: int
    checks: List[CheckResult] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.status != CheckStatus.FAIL for check in self.checks)

    @property
    def failed_checks(self) -> List[str]:
        return [check.name for check in self.checks if check.status == CheckStatus.FAIL]

    def check(self, name: str) -> CheckResult:
        return next(check for check in self.checks if check.name == name)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    def render(self) -> str:
        """Generate human-readable report."""
        output = [f"{self.suite} suite: {self.subject} (seed {self.seed}, {self.elapsed_seconds:.2f}s)"]
        output.append("=" * 40)
        for check in self.checks:
            icon = {"pass": "✓", "fail": "✗", "skip": "-"}[check.status.value]
            line = f"{icon} {check.name}: worst {check.worst_violation:.3e} (tol {check.tolerance:.1e})"
            if check.status == CheckStatus.FAIL and check.witness:
                line += f" at {check.witness}"
            if check.detail:
                line += f" [{check.detail}]"
            output.append(line)
        output.append("PASSED" if self.passed else f"FAILED: {', '.join(self.failed_checks)}")
        return "\n".join(output)
