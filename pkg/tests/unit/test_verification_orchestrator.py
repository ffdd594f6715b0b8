"""Unit tests for VerificationOrchestrator and the run/phase models."""

import asyncio
from pathlib import Path

import pytest

from core.models.config import LimitsConfig, RunConfig
from core.models.errors import CorpusIncomplete
from core.models.report import ReportFormat, VerificationReport
from core.models.workflow import PhaseResult, PhaseStatus, RunResult, RunStatus, VerificationPhase
from core.orchestration.verification_orchestrator import VerificationOrchestrator
from core.services.corpus_service import CorpusService
from core.services.report_service import ReportService
from core.services.storage_service import StorageService
from core.services.triangulation_service import TriangulationService
from core.services.verification_service import VerificationService


ROOT = Path(__file__).resolve().parents[2]


class StubVerificationService:
    """Canned phase results; the order-13 and sweep phases raise."""

    async def verify_counts(self):
        return [VerificationReport.compare("stub/count", "counts", "stub", 1, 1)]

    async def verify_partition_tables(self):
        return [VerificationReport.compare("stub/listing", "partitions", "stub", 3, 4)]

    async def verify_order13(self):
        raise CorpusIncomplete("Needs the corpus through order 13; cap is 6")

    async def theorem_sweep(self):
        raise CorpusIncomplete("sweep unavailable")


class TestRunModels:
    """Test cases for PhaseResult and RunResult."""

    def test_phase_lifecycle(self):
        phase = PhaseResult(phase=VerificationPhase.COUNTS)
        assert phase.status == PhaseStatus.PENDING
        phase.mark_started()
        phase.mark_completed({"claims": ["a"]})
        assert phase.is_successful
        assert phase.duration is not None
        assert phase.results == {"claims": ["a"]}

    def test_phase_summary_without_timing(self):
        phase = PhaseResult(phase=VerificationPhase.THEOREMS)
        phase.mark_started()
        phase.mark_failed("boom")
        summary = phase.summary(include_timing=False)
        assert summary["status"] == "failed"
        assert summary["errors"] == ["boom"]
        assert "duration" not in summary

    def test_run_status_from_phases(self):
        run = RunResult()
        run.mark_started()
        ok = PhaseResult(phase=VerificationPhase.COUNTS)
        ok.mark_completed()
        bad = PhaseResult(phase=VerificationPhase.ORDER13)
        bad.mark_failed("cap")
        run.add_phase_result(ok)
        run.add_phase_result(bad)
        run.mark_finished()
        assert run.status == RunStatus.PARTIAL_SUCCESS
        assert run.get_phase_result(VerificationPhase.ORDER13).is_failed


class TestVerificationOrchestrator:
    """Test cases for VerificationOrchestrator."""

    def setup_method(self):
        self.config = RunConfig(
            limits=LimitsConfig(
                max_order=6,
                cross_check_order=6,
                sweep_order=6,
                monotonicity_order=5,
                partition_table_order=6,
                oracle_order=6,
                lemma_order=6,
            ),
            suppress_timestamp=True,
        )

    def _orchestrator(self, tmp_path, verification=None) -> VerificationOrchestrator:
        triangulations = TriangulationService()
        storage = StorageService(str(tmp_path), golden_directory=str(ROOT / "golden"))
        corpus = CorpusService(triangulations, storage, max_order=self.config.limits.max_order)
        if verification is None:
            verification = VerificationService(corpus, storage, limits=self.config.limits)
        reports = ReportService(
            storage, schema_path=str(ROOT / "documents" / "report_schema.json"), suppress_timestamp=True
        )
        return VerificationOrchestrator(self.config, corpus, verification, reports)

    def test_unknown_selection(self, tmp_path):
        with pytest.raises(ValueError):
            asyncio.run(self._orchestrator(tmp_path).run("everything"))

    def test_corpus_phase(self, tmp_path):
        orchestrator = self._orchestrator(tmp_path)
        reports = asyncio.run(orchestrator._run_corpus_phase())
        computed = {r.claim_id: r.computed for r in reports}
        assert computed == {
            "corpus/order4/min-degree3": 1,
            "corpus/order5/min-degree3": 1,
            "corpus/order6/min-degree3": 2,
            "corpus/order6/min-degree4": 1,
        }

    def test_failed_phase_is_recorded(self, tmp_path):
        orchestrator = self._orchestrator(tmp_path, StubVerificationService())
        run_result, bundle = asyncio.run(orchestrator.run("order13"))
        assert run_result.status == RunStatus.FAILED
        phase = run_result.get_phase_result(VerificationPhase.ORDER13)
        assert phase.is_failed
        assert "order 13" in phase.error_message
        assert bundle.reports == []
        assert bundle.phases[0]["status"] == "failed"

    def test_stub_phases_are_tallied(self, tmp_path):
        orchestrator = self._orchestrator(tmp_path, StubVerificationService())
        run_result, bundle = asyncio.run(orchestrator.run("partitions"))
        assert run_result.status == RunStatus.COMPLETED
        assert bundle.mismatch_count == 1
        assert bundle.phases == [{
            "phase": "partitions",
            "status": "completed",
            "total_items": 1,
            "matched_items": 0,
            "disagreeing_items": 1,
            "errors": [],
        }]

    def test_counts_run_and_save(self, tmp_path):
        orchestrator = self._orchestrator(tmp_path)
        run_result, bundle = asyncio.run(orchestrator.run("counts"))
        assert run_result.is_successful
        assert bundle.get("mpg-count-min-degree-4/order6").is_match
        assert bundle.get("fwf22-count/order5").is_match
        assert bundle.settings["limits"]["max_order"] == 6

        path = asyncio.run(orchestrator.save(bundle, "counts"))
        assert path.name == "verify_counts.json"
        text_path = asyncio.run(orchestrator.save(bundle, "counts", ReportFormat.TEXT))
        assert "[ok] mpg-count-min-degree-4/order6" in text_path.read_text(encoding="utf-8")

    def test_order13_fails_below_cap(self, tmp_path):
        run_result, _ = asyncio.run(self._orchestrator(tmp_path).run("order13"))
        assert run_result.get_phase_result(VerificationPhase.ORDER13).is_failed


if __name__ == "__main__":
    pytest.main([__file__])
