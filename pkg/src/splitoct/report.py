"""Structured pass/fail records for identity sweeps."""
from __future__ import annotations

from dataclasses import dataclass, field

MAX_DETAILS = 10


@dataclass
class VerificationReport:
    """Outcome of one identity sweep.

    ``failures`` is a count; the first few offending cases are kept in
    ``failure_details`` so a failing sweep names its witnesses.  ``exact``
    distinguishes sweeps done in rational arithmetic (max_residual is then
    exactly 0.0 or a count-free residual has no meaning) from float sweeps.
    """

    name: str
    cases: int = 0
    failures: int = 0
    failure_details: list = field(default_factory=list)
    max_residual: float = 0.0
    exact: bool = True
    meta: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record_case(self, ok: bool, detail: str = "", residual: float = 0.0) -> None:
        self.cases += 1
        if residual > self.max_residual:
            self.max_residual = residual
        if not ok:
            self.failures += 1
            if len(self.failure_details) < MAX_DETAILS:
                self.failure_details.append(detail)

    def merge(self, other: "VerificationReport") -> None:
        self.cases += other.cases
        self.failures += other.failures
        for d in other.failure_details:
            if len(self.failure_details) < MAX_DETAILS:
                self.failure_details.append(f"{other.name}: {d}")
        self.max_residual = max(self.max_residual, other.max_residual)
        self.exact = self.exact and other.exact

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "failures": self.failures,
            "failure_details": list(self.failure_details),
            "max_residual": self.max_residual,
            "exact": self.exact,
            "passed": self.passed,
            "meta": dict(self.meta),
        }
