import asyncio
import logging
from dataclasses import asdict
from pathlib import Path
from typing import Awaitable, Callable, Dict, List, Optional

from core.models.config import RunConfig
from core.models.errors import PlanarGraphError
from core.models.report import ClaimStatus, ReportBundle, ReportFormat, VerificationReport
from core.models.workflow import PhaseResult, RunResult, VerificationPhase
from core.services.corpus_service import CorpusService
from core.services.report_service import ReportService
from core.services.verification_service import VerificationService


# verify sub-verbs and the phases they run
PHASE_SELECTIONS: Dict[str, List[VerificationPhase]] = {
    "table5.1": [VerificationPhase.COUNTS],
    "appendix1": [VerificationPhase.PARTITIONS],
    "appendix2": [VerificationPhase.ORDER13],
    "theorems": [VerificationPhase.THEOREMS],
    "all": [
        VerificationPhase.CORPUS,
        VerificationPhase.COUNTS,
        VerificationPhase.PARTITIONS,
        VerificationPhase.ORDER13,
        VerificationPhase.THEOREMS,
    ],
}

# Descriptive names accepted alongside the published section names
SELECTION_ALIASES: Dict[str, str] = {
    "counts": "table5.1",
    "partitions": "appendix1",
    "order13": "appendix2",
}


def resolve_selection(selection: str) -> str:
    """Map an alias to its sub-verb; unknown names pass through unchanged."""
    return SELECTION_ALIASES.get(selection, selection)


# Smallest order with a triangulation of the given minimum degree
SLICE_START = {3: 4, 4: 6, 5: 12}


class VerificationOrchestrator:
    """Runs verification phases in order and assembles the report bundle."""

    def __init__(
        self,
        config: RunConfig,
        corpus_service: CorpusService,
        verification_service: VerificationService,
        report_service: ReportService,
    ):
        self.config = config
        self.corpus_service = corpus_service
        self.verification_service = verification_service
        self.report_service = report_service
        self.logger = logging.getLogger(__name__)

    def _handle_error(self, message: str, error: Exception) -> str:
        """Centralized error handling."""
        error_msg = f"{message}: {str(error)}"
        self.logger.error(error_msg)
        return error_msg

    def _phase_runners(self) -> Dict[VerificationPhase, Callable[[], Awaitable[List[VerificationReport]]]]:
        service = self.verification_service
        return {
            VerificationPhase.CORPUS: self._run_corpus_phase,
            VerificationPhase.COUNTS: service.verify_counts,
            VerificationPhase.PARTITIONS: service.verify_partition_tables,
            VerificationPhase.ORDER13: service.verify_order13,
            VerificationPhase.THEOREMS: service.theorem_sweep,
        }

    async def run(self, selection: str = "all") -> tuple:
        """Run the selected phases.

        Aliases resolve to their sub-verb first.

        Returns:
            (RunResult, ReportBundle)
        """
        selection = resolve_selection(selection)
        if selection not in PHASE_SELECTIONS:
            raise ValueError(f"Unknown verification selection: {selection}")
        phases = PHASE_SELECTIONS[selection]
        self.logger.info(f"Starting verification run: {selection} ({', '.join(p.value for p in phases)})")

        run_result = RunResult()
        run_result.mark_started()
        bundle = ReportBundle(name=self.config.name, settings=self._settings())
        runners = self._phase_runners()

        for phase in phases:
            phase_result = await self._run_phase(phase, runners[phase], bundle)
            run_result.add_phase_result(phase_result)

        run_result.mark_finished()
        bundle.phases = [
            run_result.phase_results[p].summary(include_timing=not self.config.suppress_timestamp)
            for p in phases
        ]
        bundle.refresh()
        self.logger.info(
            f"Verification finished: {run_result.status.value}, "
            f"{len(bundle.reports)} claims, {bundle.mismatch_count} disagreements"
        )
        return run_result, bundle

    async def _run_phase(
        self,
        phase: VerificationPhase,
        runner: Callable[[], Awaitable[List[VerificationReport]]],
        bundle: ReportBundle,
    ) -> PhaseResult:
        phase_result = PhaseResult(phase=phase)
        phase_result.mark_started()
        self.logger.info(f"Phase {phase.value} started")
        try:
            reports = await runner()
        except PlanarGraphError as e:
            phase_result.mark_failed(self._handle_error(f"Phase {phase.value} failed", e))
            return phase_result

        bundle.extend(reports)
        phase_result.total_items = len(reports)
        phase_result.matched_items = sum(1 for r in reports if r.status == ClaimStatus.MATCH)
        phase_result.disagreeing_items = phase_result.total_items - phase_result.matched_items
        phase_result.mark_completed({"claims": [r.claim_id for r in reports]})
        self.logger.info(
            f"Phase {phase.value}: {phase_result.matched_items}/{phase_result.total_items} claims match"
        )
        return phase_result

    async def _run_corpus_phase(self) -> List[VerificationReport]:
        """Build every slice up to the order cap; orders run one after another, degree bounds concurrently."""
        semaphore = asyncio.Semaphore(max(1, self.config.workers))
        reports: List[VerificationReport] = []

        async def build(order: int, min_degree: int) -> VerificationReport:
            async with semaphore:
                corpus_slice = await self.corpus_service.build_slice(order, min_degree)
                return VerificationReport(
                    claim_id=f"corpus/order{order}/min-degree{min_degree}",
                    phase=VerificationPhase.CORPUS.value,
                    reference="isomorph-free slice generated by operator closure",
                    computed=len(corpus_slice),
                    published=None,
                    status=ClaimStatus.MATCH,
                    evidence={"strategy": corpus_slice.strategy},
                )

        for order in range(4, self.config.limits.max_order + 1):
            bounds = [d for d, first in SLICE_START.items() if order >= first]
            reports.extend(await asyncio.gather(*[build(order, d) for d in bounds]))
        return reports

    def _settings(self) -> Dict[str, object]:
        return {
            "limits": asdict(self.config.limits),
            "min_degree": self.config.min_degree,
            "precision_bits": self.config.precision_bits,
            "seed": self.config.seed,
            "workers": self.config.workers,
        }

    async def save(self, bundle: ReportBundle, selection: str, report_format: Optional[ReportFormat] = None) -> Path:
        """Write the bundle through the report service."""
        chosen = report_format or ReportFormat(self.config.report_format)
        return await self.report_service.save_bundle(bundle, f"verify_{selection}", chosen)
