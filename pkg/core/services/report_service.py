"""Report service: validates, renders and saves verification report bundles."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import jsonschema

from core.interfaces.storage_interface import IStorageService
from core.models.errors import BadFormat
from core.models.report import ClaimStatus, ReportBundle, ReportFormat
from core.utils.constants import REPORT_SCHEMA_PATH


class ReportService:
    """Service for rendering and persisting report bundles."""

    def __init__(
        self,
        storage_service: Optional[IStorageService] = None,
        schema_path: str = REPORT_SCHEMA_PATH,
        suppress_timestamp: bool = False,
    ):
        self.storage_service = storage_service
        self.schema_path = Path(schema_path)
        self.suppress_timestamp = suppress_timestamp
        self.logger = logging.getLogger(__name__)
        self._schema: Optional[Dict[str, Any]] = None

    def _handle_error(self, operation: str, error: Exception) -> None:
        """Centralized error handling and logging."""
        self.logger.error(f"Error {operation}: {str(error)}")
        raise error

    @property
    def schema(self) -> Dict[str, Any]:
        if self._schema is None:
            with open(self.schema_path, "r", encoding="utf-8") as f:
                self._schema = json.load(f)
        return self._schema

    def to_payload(self, bundle: ReportBundle) -> Dict[str, Any]:
        """Plain JSON data of a bundle (enums as their values)."""
        bundle.refresh()
        bundle.stamp(self.suppress_timestamp)
        return json.loads(bundle.to_json())

    def validate(self, payload: Dict[str, Any]) -> None:
        """Raises BadFormat when the payload breaks the report schema."""
        try:
            jsonschema.validate(instance=payload, schema=self.schema)
        except jsonschema.ValidationError as e:
            self._handle_error("validating report", BadFormat(f"Report schema violation: {e.message}"))

    def render_json(self, bundle: ReportBundle) -> str:
        payload = self.to_payload(bundle)
        self.validate(payload)
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def render_text(self, bundle: ReportBundle) -> str:
        """Human-readable summary: one line per claim, details for disagreements."""
        payload = self.to_payload(bundle)
        lines = [f"{payload['name']} (schema {payload['schema_version']})"]
        if payload.get("generated_at"):
            lines.append(f"Generated: {payload['generated_at']}")
        counts = payload["status_counts"]
        lines.append(
            "Claims: " + ", ".join(f"{status.value} {counts.get(status.value, 0)}" for status in ClaimStatus)
        )
        lines.append(f"Mismatch count: {payload['mismatch_count']}")

        for phase in payload.get("phases", []):
            lines.append("")
            lines.append(
                f"== {phase['phase']} [{phase['status']}] "
                f"{phase.get('matched_items', 0)}/{phase.get('total_items', 0)} matched"
            )
            for error in phase.get("errors", []):
                lines.append(f"   ! {error}")
            for report in bundle.by_phase(phase["phase"]):
                marker = {"match": "ok", "mismatch": "XX", "internal-conflict": "??"}[report.status.value]
                lines.append(f"  [{marker}] {report.claim_id}: computed {report.computed!r}, published {report.published!r}")
                if report.is_match:
                    continue
                for conflict in report.evidence.get("conflicts", []):
                    lines.append(f"         conflict: {conflict}")
                for witness in report.witnesses[:3]:
                    lines.append(f"         witness: {witness}")
        return "\n".join(lines) + "\n"

    def render(self, bundle: ReportBundle, report_format: ReportFormat = ReportFormat.JSON) -> str:
        if report_format == ReportFormat.TEXT:
            return self.render_text(bundle)
        return self.render_json(bundle)

    async def save_bundle(
        self, bundle: ReportBundle, file_stem: str = "verification", report_format: ReportFormat = ReportFormat.JSON
    ) -> Path:
        """Render and write a bundle under the reports directory."""
        if self.storage_service is None:
            self._handle_error("saving report", BadFormat("No storage service configured"))
        content = self.render(bundle, report_format)
        suffix = "json" if report_format == ReportFormat.JSON else "txt"
        path = await self.storage_service.save_report(content, f"{file_stem}.{suffix}")
        self.logger.info(f"Report saved: {path} ({bundle.mismatch_count} disagreements)")
        return path
