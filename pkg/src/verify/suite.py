"""Common runner for the verification suites."""

import time
from typing import Callable, List, Tuple

from loguru import logger

from .config import SuiteConfig
from .report import CheckResult, VerificationReport


class Suite:
    """Runs an ordered list of named checks into one VerificationReport.

    Each check is a method returning a CheckResult. A check that raises is
    recorded as failed with the error as detail, so every declared check
    appears exactly once in the report.
    """

    suite_name = "suite"

    def __init__(self, cfg: SuiteConfig):
        self.cfg = cfg
        self.results: List[CheckResult] = []

    @property
    def subject(self) -> str:
        raise NotImplementedError

    def checks(self) -> List[Tuple[str, Callable[[int], CheckResult]]]:
        """(name, method) pairs; the method receives the check index for seeding."""
        raise NotImplementedError

    def measured(self, name: str, worst: float, witness: str = "", detail: str = "") -> CheckResult:
        return CheckResult.measured(name, worst, self.cfg.tolerance(name), witness, detail)

    def run_all_checks(self) -> VerificationReport:
        """Run all checks and return the report."""
        logger.info(f"Starting {self.suite_name} suite for {self.subject}...")
        started = time.perf_counter()
        self.results = []

        for index, (name, method) in enumerate(self.checks()):
            logger.info(f"Running check: {name}")
            try:
                result = method(index)
            except Exception as e:
                logger.error(f"Error in {name} check: {e}")
                result = CheckResult.measured(name, float("inf"), self.cfg.tolerance(name),
                                              detail=f"{type(e).__name__}: {e}")
            self.results.append(result)

        report = VerificationReport(subject=self.subject, suite=self.suite_name, seed=self.cfg.seed,
                                    checks=self.results, elapsed_seconds=time.perf_counter() - started)
        logger.info(f"{self.suite_name} suite completed: "
                    f"{'all passed' if report.passed else 'failed ' + ', '.join(report.failed_checks)}")
        return report
