"""Verification report data models."""

from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional

from dataclasses_json import dataclass_json

from core.utils.constants import REPORT_SCHEMA_VERSION


class ClaimStatus(Enum):
    """Outcome of comparing a computed fact with a published one."""

    MATCH = "match"
    MISMATCH = "mismatch"
    INTERNAL_CONFLICT = "internal-conflict"


class ReportFormat(Enum):
    """Report output formats."""

    JSON = "json"
    TEXT = "text"


@dataclass_json
@dataclass
class VerificationReport:
    """One audited claim.

    ``witnesses`` holds graph6 strings from which a disagreement can be
    replayed; ``evidence`` carries whatever else the check computed.
    """

    claim_id: str
    phase: str
    reference: str
    computed: Any = None
    published: Any = None
    status: ClaimStatus = ClaimStatus.MATCH
    evidence: Dict[str, Any] = field(default_factory=dict)
    witnesses: List[str] = field(default_factory=list)

    @property
    def is_match(self) -> bool:
        return self.status == ClaimStatus.MATCH

    @classmethod
    def compare(
        cls,
        claim_id: str,
        phase: str,
        reference: str,
        computed: Any,
        published: Any,
        **extra: Any,
    ) -> "VerificationReport":
        """Build a report whose status is decided by plain equality."""
        status = ClaimStatus.MATCH if computed == published else ClaimStatus.MISMATCH
        return cls(claim_id, phase, reference, computed, published, status, **extra)


@dataclass_json
@dataclass
class ReportBundle:
    """All reports from one run, in the order the phases produced them."""

    name: str = "mpg-verification"
    schema_version: str = REPORT_SCHEMA_VERSION
    generated_at: Optional[str] = None
    settings: Dict[str, Any] = field(default_factory=dict)
    reports: List[VerificationReport] = field(default_factory=list)
    phases: List[Dict[str, Any]] = field(default_factory=list)
    status_counts: Dict[str, int] = field(default_factory=dict)
    mismatch_count: int = 0

    def add(self, report: VerificationReport) -> None:
        self.reports.append(report)
        self.refresh()

    def extend(self, reports: List[VerificationReport]) -> None:
        self.reports.extend(reports)
        self.refresh()

    def refresh(self) -> None:
        """Recompute the status tallies."""
        counts = {status.value: 0 for status in ClaimStatus}
        for report in self.reports:
            counts[report.status.value] += 1
        self.status_counts = counts
        self.mismatch_count = len(self.reports) - counts[ClaimStatus.MATCH.value]

    def stamp(self, suppress: bool = False) -> None:
        self.generated_at = None if suppress else datetime.utcnow().isoformat()

    def by_phase(self, phase: str) -> List[VerificationReport]:
        return [r for r in self.reports if r.phase == phase]

    def get(self, claim_id: str) -> Optional[VerificationReport]:
        for report in self.reports:
            if report.claim_id == claim_id:
                return report
        return None
