"""Models for verification reports."""
from typing import List, Optional, Tuple

from pydantic import BaseModel, validator

from webbasis.models.word import Word


class CheckResult(BaseModel):
    """Outcome of a single named check."""
    name: str
    passed: bool
    detail: Optional[str] = None

    def line(self) -> str:
        prefix = "PASS" if self.passed else "FAIL"
        return f"{prefix} {self.name}" + (f": {self.detail}" if self.detail else "")


class SuiteReport(BaseModel):
    """Model for a verification suite; ``passed`` is true when no check failed."""
    suite: str
    checks: List[CheckResult] = []

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def add(self, name: str, passed: bool, detail: Optional[str] = None) -> None:
        self.checks.append(CheckResult(name=name, passed=passed, detail=detail))

    def lines(self) -> List[str]:
        return [check.line() for check in self.checks]

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite} ({len(self.checks) - len(self.failures)}/{len(self.checks)} checks)"


class MembershipReport(BaseModel):
    """Outcome of the basis membership test for one diagram."""
    is_basis: bool
    extracted_word: Word
    mismatch_cell: Optional[Tuple[int, int]] = None

    @validator('mismatch_cell')
    def validate_mismatch(cls, v, values):
        if v is not None and values.get('is_basis'):
            raise ValueError('A basis diagram has no mismatching cell')
        return v

    def summary(self) -> str:
        if self.is_basis:
            return f"BASIS {self.extracted_word}"
        where = f" at cell {self.mismatch_cell}" if self.mismatch_cell is not None else ""
        return f"NOT-BASIS {self.extracted_word}{where}"
