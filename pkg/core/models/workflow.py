from dataclasses import dataclass, field
from datetime import datetime, timedelta
from enum import Enum
from typing import Any, Dict, List, Optional
from uuid import uuid4


class VerificationPhase(Enum):
    """Verification run phases."""
    CORPUS = "corpus"
    COUNTS = "counts"
    PARTITIONS = "partitions"
    ORDER13 = "order13"
    THEOREMS = "theorems"


class PhaseStatus(Enum):
    """Phase execution status."""
    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


class RunStatus(Enum):
    """Overall run status."""
    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"
    PARTIAL_SUCCESS = "partial_success"


@dataclass
class PhaseResult:
    """Result of one verification phase."""
    phase: VerificationPhase
    status: PhaseStatus = PhaseStatus.PENDING

    # Timing
    start_time: Optional[datetime] = None
    end_time: Optional[datetime] = None

    # Claims audited in this phase
    total_items: int = 0
    matched_items: int = 0
    disagreeing_items: int = 0

    # Error tracking
    error_message: Optional[str] = None
    errors: List[str] = field(default_factory=list)

    results: Dict[str, Any] = field(default_factory=dict)

    @property
    def duration(self) -> Optional[timedelta]:
        """Calculate phase duration."""
        if self.start_time and self.end_time:
            return self.end_time - self.start_time
        return None

    @property
    def is_successful(self) -> bool:
        return self.status == PhaseStatus.COMPLETED

    @property
    def is_failed(self) -> bool:
        return self.status == PhaseStatus.FAILED

    def mark_started(self) -> None:
        self.status = PhaseStatus.RUNNING
        self.start_time = datetime.utcnow()

    def mark_completed(self, results: Optional[Dict[str, Any]] = None) -> None:
        self.status = PhaseStatus.COMPLETED
        self.end_time = datetime.utcnow()
        if results:
            self.results.update(results)

    def mark_failed(self, error: str) -> None:
        self.status = PhaseStatus.FAILED
        self.end_time = datetime.utcnow()
        self.error_message = error
        self.errors.append(error)

    def summary(self, include_timing: bool = True) -> Dict[str, Any]:
        """Phase summary as stored in the report bundle."""
        data = {
            "phase": self.phase.value,
            "status": self.status.value,
            "total_items": self.total_items,
            "matched_items": self.matched_items,
            "disagreeing_items": self.disagreeing_items,
            "errors": list(self.errors),
        }
        if include_timing:
            data["duration"] = str(self.duration) if self.duration else None
        return data


@dataclass
class RunResult:
    """Complete verification run result."""

    run_id: str = field(default_factory=lambda: str(uuid4()))
    status: RunStatus = RunStatus.PENDING
    start_time: Optional[datetime] = None
    end_time: Optional[datetime] = None

    phase_results: Dict[VerificationPhase, PhaseResult] = field(default_factory=dict)
    errors: List[str] = field(default_factory=list)
    output_files: List[str] = field(default_factory=list)

    @property
    def duration(self) -> Optional[timedelta]:
        if self.start_time and self.end_time:
            return self.end_time - self.start_time
        return None

    @property
    def is_successful(self) -> bool:
        return self.status == RunStatus.COMPLETED

    def get_phase_result(self, phase: VerificationPhase) -> Optional[PhaseResult]:
        return self.phase_results.get(phase)

    def add_phase_result(self, phase_result: PhaseResult) -> None:
        self.phase_results[phase_result.phase] = phase_result

    def mark_started(self) -> None:
        self.status = RunStatus.RUNNING
        if self.start_time is None:
            self.start_time = datetime.utcnow()

    def mark_finished(self) -> None:
        """Completed when every phase completed, partial when some failed."""
        self.end_time = datetime.utcnow()
        failed = [p for p in self.phase_results.values() if p.is_failed]
        if not failed:
            self.status = RunStatus.COMPLETED
        elif len(failed) == len(self.phase_results):
            self.status = RunStatus.FAILED
        else:
            self.status = RunStatus.PARTIAL_SUCCESS

    def mark_failed(self, error: str) -> None:
        self.status = RunStatus.FAILED
        self.end_time = datetime.utcnow()
        self.errors.append(error)
