"""
Check reports returned by the identity checkers.

Checkers never raise on a failing identity; they hand back a CheckReport
describing the first counterexample, and the command line turns it into an
exit status.
"""
import logging
from typing import Any, Dict, Iterable, List, Optional

from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)


class CheckReport(BaseModel):
    """Outcome of one identity check."""

    name: str
    N: int
    passed: bool = True
    checked: int = 0
    message: str = ""
    failure: Optional[Dict[str, str]] = None
    # Reported-only checks never fail a suite
    asserted: bool = True
    details: Dict[str, Any] = Field(default_factory=dict)
    parts: List["CheckReport"] = Field(default_factory=list)

    @property
    def status(self) -> str:
        if not self.asserted:
            return "reported"
        return "pass" if self.passed else "fail"

    def summary(self) -> Dict[str, Any]:
        """
        Flatten the report into a JSON friendly dictionary.

        Returns:
            Dict with status, counts and (recursively) the parts
        """
        data: Dict[str, Any] = {
            "name": self.name,
            "N": self.N,
            "status": self.status,
            "checked": self.checked,
            "message": self.message,
        }
        if self.failure:
            data["failure"] = dict(self.failure)
        if self.details:
            data["details"] = self.details
        if self.parts:
            data["parts"] = [part.summary() for part in self.parts]
        return data


class ReportBuilder:
    """Accumulates checked cases and stops at the first failure."""

    def __init__(self, name: str, N: int, asserted: bool = True):
        self.report = CheckReport(name=name, N=N, asserted=asserted)

    @property
    def failed(self) -> bool:
        return not self.report.passed

    def expect_equal(self, case: str, lhs: Any, rhs: Any) -> bool:
        """
        Record one comparison.

        Args:
            case: Human readable description of the instance checked
            lhs: Left-hand side
            rhs: Right-hand side

        Returns:
            True if both sides agree
        """
        self.report.checked += 1
        if lhs == rhs:
            return True
        self.fail(case, lhs=str(lhs), rhs=str(rhs))
        return False

    def expect(self, case: str, condition: bool, **context: Any) -> bool:
        self.report.checked += 1
        if condition:
            return True
        self.fail(case, **{key: str(value) for key, value in context.items()})
        return False

    def fail(self, case: str, **context: str) -> None:
        if not self.report.passed:
            return
        self.report.passed = False
        self.report.failure = {"case": case, **context}
        self.report.message = f"{self.report.name}: failed on {case}"
        log = logger.warning if self.report.asserted else logger.info
        log("check %s (N=%d) failed on %s", self.report.name, self.report.N, case)

    def done(self, message: str = "", **details: Any) -> CheckReport:
        if self.report.passed:
            self.report.message = message or f"{self.report.name}: {self.report.checked} cases passed"
        self.report.details.update(details)
        return self.report


def combine_reports(name: str, N: int, parts: Iterable[CheckReport]) -> CheckReport:
    """
    Merge several reports into one suite report.

    Args:
        name: Name of the suite
        N: Order of the root of unity
        parts: Reports to merge

    Returns:
        A report that passes iff every asserted part passes
    """
    parts = list(parts)
    failed = [part for part in parts if part.asserted and not part.passed]
    report = CheckReport(
        name=name,
        N=N,
        passed=not failed,
        checked=sum(part.checked for part in parts),
        parts=parts,
    )
    if failed:
        report.failure = failed[0].failure
        report.message = "; ".join(part.message for part in failed)
    else:
        report.message = f"{name}: {len(parts)} checks passed"
    return report


CheckReport.model_rebuild()
