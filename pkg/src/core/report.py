"""Findings and validation reports shared by the validators."""

from enum import Enum
from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field


class Severity(str, Enum):
    """Severity levels for validation findings."""
    ERROR = "error"     # Constraint violated, object rejected downstream
    WARNING = "warning" # Suspicious but accepted
    INFO = "info"


class Finding(BaseModel):
    """A single violated (or noteworthy) constraint."""
    check_name: str
    severity: Severity = Severity.ERROR
    message: str
    witness: Optional[float] = None
    details: Dict[str, Any] = Field(default_factory=dict)


class ValidationReport(BaseModel):
    """List of findings about one subject; empty of errors when valid."""
    subject: str
    findings: List[Finding] = Field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not any(f.severity == Severity.ERROR for f in self.findings)

    @property
    def violated_checks(self) -> List[str]:
        return [f.check_name for f in self.findings if f.severity == Severity.ERROR]

    def add(self, finding: Finding) -> None:
        self.findings.append(finding)

    def render(self) -> str:
        """Generate human-readable report."""
        if not self.findings:
            return f"✓ {self.subject}: no violations."

        output = [f"{self.subject} ({len(self.findings)} findings)"]
        output.append("=" * 40)

        for finding in self.findings:
            icon = "✗" if finding.severity == Severity.ERROR else "!" if finding.severity == Severity.WARNING else "i"
            witness = f" at {finding.witness:.6g}" if finding.witness is not None else ""
            output.append(f"{icon} [{finding.check_name}] {finding.message}{witness}")

        return "\n".join(output)
