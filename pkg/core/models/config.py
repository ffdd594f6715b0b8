"""Run configuration models."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from core.utils.constants import DEFAULT_LOG_FILES, DEFAULT_MAX_ORDER, DEFAULT_PRECISION_BITS


class LogLevel(Enum):
    """Logging levels."""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


@dataclass
class LimitsConfig:
    """Order caps for generation and the individual audits."""
    max_order: int = DEFAULT_MAX_ORDER
    poly_order_cap: int = 15
    cross_check_order: int = 9
    sweep_order: int = 11
    monotonicity_order: int = 7
    partition_table_order: int = 10
    oracle_order: int = 10
    lemma_order: int = 9


@dataclass
class RunConfig:
    """Complete run configuration: file values overridden by CLI flags."""

    name: str = "mpg-verification"
    subcommand: Optional[str] = None

    limits: LimitsConfig = field(default_factory=LimitsConfig)
    min_degree: int = 3
    precision_bits: int = DEFAULT_PRECISION_BITS
    workers: int = 1
    seed: int = 20240601

    # Paths
    output_dir: str = "output"
    corpus_dir: Optional[str] = None
    golden_dir: str = "golden"

    # Reports
    report_format: str = "json"
    suppress_timestamp: bool = False
    log_level: LogLevel = LogLevel.INFO

    # Logs
    log_dir: Optional[str] = None
    log_files: Dict[str, str] = field(default_factory=lambda: dict(DEFAULT_LOG_FILES))

    def validate(self) -> List[str]:
        """Validate configuration and return list of errors."""
        errors = []

        if self.limits.max_order < 4:
            errors.append("limits.max_order must be at least 4")

        if self.limits.max_order > 14:
            errors.append("limits.max_order above 14 is not supported")

        for name in (
            "cross_check_order",
            "sweep_order",
            "monotonicity_order",
            "partition_table_order",
            "oracle_order",
            "lemma_order",
        ):
            if getattr(self.limits, name) > self.limits.max_order:
                errors.append(f"limits.{name} exceeds limits.max_order")

        if self.limits.poly_order_cap < 4:
            errors.append("limits.poly_order_cap must be at least 4")

        if self.min_degree not in (3, 4, 5):
            errors.append("min_degree must be 3, 4 or 5")

        if self.precision_bits < 64:
            errors.append("precision_bits must be at least 64")

        if self.workers < 1:
            errors.append("workers must be positive")

        if self.report_format not in ("json", "text"):
            errors.append("report_format must be json or text")

        if not all(isinstance(k, str) and isinstance(v, str) and v for k, v in self.log_files.items()):
            errors.append("log_files must map logger names to file names")

        return errors
