"""Audits of published counts, partition listings and theorem statements against the corpus."""

import logging
import random
from collections import Counter
from itertools import combinations
from typing import Any, Dict, Iterable, List, Optional, Tuple

from core.interfaces.storage_interface import IStorageService
from core.models.coloring import PartitionSet
from core.models.config import LimitsConfig
from core.models.errors import (
    CannotReachMaximal,
    CorpusIncomplete,
    NoAlternative,
    NotProper,
    NotTwoTwoFwf,
    ReductionStalled,
)
from core.models.fwf import FwfCatalog
from core.models.plane_graph import PlaneGraph
from core.models.report import ClaimStatus, VerificationReport
from core.services.chrompoly_service import ChromaticPolynomialService
from core.services.coloring_service import ColoringService
from core.services.corpus_service import CorpusService
from core.services.fwf_service import FwfService
from core.services.wheel_service import WheelService
from core.utils.constants import GOLDEN_CLAIMS_FILE, GOLDEN_LISTINGS_FILE, GOLDEN_ORDER13_FILE
from core.utils.listing_match import best_match, inspect_listing, validate_listing
from infrastructure.storage.graph_codecs import encode_graph6


MAX_WITNESSES = 5

# Expected order drop of a plain contraction, by wheel kind
ORDER_DROP = {2: 3, 3: 1, 4: 2, 5: 2}

SIX_WHEEL_PARTITIONS = {"line": 2, "star": 2, "triangles": 4}

MIN_DEGREE_5_TRIANGLES = {(5, 5, 5), (5, 5, 6), (5, 6, 6)}


def graph6_text(graph: PlaneGraph) -> str:
    return encode_graph6(graph).decode("ascii")


def has_independent_degree4_triple(graph: PlaneGraph) -> bool:
    """Three pairwise non-adjacent degree-4 vertices exist."""
    fours = [v for v in range(graph.order) if graph.degree(v) == 4]
    return any(
        not graph.adjacent(a, b) and not graph.adjacent(a, c) and not graph.adjacent(b, c)
        for a, b, c in combinations(fours, 3)
    )


def triangle_degree_patterns(graph: PlaneGraph) -> set:
    """Sorted degree triples over all triangles of the graph."""
    patterns = set()
    for a, b in graph.edges:
        for c in set(graph.neighbors(a)) & set(graph.neighbors(b)):
            if c > b:
                patterns.add(tuple(sorted((graph.degree(a), graph.degree(b), graph.degree(c)))))
    return patterns


class SweepTally:
    """Counterexample collector for one swept claim."""

    def __init__(self, claim_id: str, phase: str, reference: str):
        self.claim_id = claim_id
        self.phase = phase
        self.reference = reference
        self.checked = 0
        self.failures: List[Dict[str, Any]] = []
        self.witnesses: List[str] = []
        self.evidence: Dict[str, Any] = {}

    def record(self, ok: bool, graph: Optional[PlaneGraph] = None, **detail: Any) -> None:
        self.checked += 1
        if ok:
            return
        if len(self.failures) < MAX_WITNESSES:
            self.failures.append(detail)
            if graph is not None:
                self.witnesses.append(graph6_text(graph))
        self.evidence["failure_count"] = self.evidence.get("failure_count", 0) + 1

    def report(self) -> VerificationReport:
        failures = self.evidence.get("failure_count", 0)
        evidence = dict(self.evidence)
        evidence["checked"] = self.checked
        if self.failures:
            evidence["first_failures"] = self.failures
        return VerificationReport(
            claim_id=self.claim_id,
            phase=self.phase,
            reference=self.reference,
            computed=failures,
            published=0,
            status=ClaimStatus.MATCH if failures == 0 else ClaimStatus.MISMATCH,
            evidence=evidence,
            witnesses=self.witnesses,
        )


class VerificationService:
    """Compares computed facts with the golden files and sweeps theorem statements."""

    def __init__(
        self,
        corpus_service: CorpusService,
        storage_service: IStorageService,
        coloring_service: Optional[ColoringService] = None,
        chrompoly_service: Optional[ChromaticPolynomialService] = None,
        wheel_service: Optional[WheelService] = None,
        fwf_service: Optional[FwfService] = None,
        limits: Optional[LimitsConfig] = None,
        seed: int = 20240601,
    ):
        self.logger = logging.getLogger(__name__)
        self.corpus = corpus_service
        self.storage = storage_service
        self.triangulations = corpus_service.triangulations
        self.colorings = coloring_service or ColoringService()
        self.polys = chrompoly_service or ChromaticPolynomialService()
        self.wheels = wheel_service or WheelService(self.triangulations)
        self.fwf = fwf_service or FwfService(self.triangulations, self.colorings)
        self.limits = limits or LimitsConfig()
        self.seed = seed
        self._partitions: Dict[Tuple[Tuple[int, ...], ...], PartitionSet] = {}

    def _handle_error(self, operation: str, error: Exception) -> None:
        """Centralized error handling and logging."""
        self.logger.error(f"Error {operation}: {str(error)}")
        raise error

    def _require_order(self, order: int, operation: str) -> None:
        if order > self.limits.max_order:
            self._handle_error(
                operation,
                CorpusIncomplete(f"Needs the corpus through order {order}; cap is {self.limits.max_order}"),
            )

    # Shared helpers

    async def _slice_items(self, order: int, min_degree: int) -> List[Tuple[bytes, PlaneGraph]]:
        return (await self.corpus.build_slice(order, min_degree)).items()

    async def _sweep_items(self, first: int, last: int, min_degree: int = 3) -> List[Tuple[bytes, PlaneGraph]]:
        items = []
        for order in range(max(first, 4), min(last, self.limits.max_order) + 1):
            items.extend(await self._slice_items(order, min_degree))
        return items

    def partitions_of(self, graph: PlaneGraph) -> PartitionSet:
        """4-partitions of a graph, cached per labeled embedding."""
        key = graph.rotations
        if key not in self._partitions:
            self._partitions[key] = self.colorings.enumerate_partitions(graph, 4)
        return self._partitions[key]

    def _load_golden(self, file_name: str) -> Dict[str, Any]:
        return self.storage.load_golden(file_name)

    # Counts

    async def verify_counts(self) -> List[VerificationReport]:
        """Count table, (2,2)-FWF counts, generation cross-checks and the order-13 claims."""
        claims = self._load_golden(GOLDEN_CLAIMS_FILE).get("claims", {})
        reports = []
        reports.extend(await self.count_table_reports(claims["mpg-count-min-degree-4"]))
        reports.extend(await self.strategy_agreement_reports())
        reports.extend(self.fwf22_count_reports(claims["fwf22-count"]))
        if self.limits.max_order >= 13:
            reports.append(await self.single_degree4_report(claims["order13-single-degree4"]))
        else:
            self.logger.warning("Order-13 claims skipped: corpus cap below 13")
        reports.extend(await self.absent_single_degree4_reports(claims["no-single-degree4-below-13"]))
        return reports

    async def count_table_reports(self, claim: Dict[str, Any]) -> List[VerificationReport]:
        reports = []
        for order, published in sorted((int(k), int(v)) for k, v in claim["values"].items()):
            if order > self.limits.max_order:
                self.logger.warning(f"Count for order {order} skipped: corpus cap {self.limits.max_order}")
                continue
            items = await self._slice_items(order, 4)
            report = VerificationReport.compare(
                f"mpg-count-min-degree-4/order{order}",
                "counts",
                claim["reference"],
                len(items),
                published,
                evidence={"degree_sequences": sorted(g.degree_string for _, g in items)},
            )
            if not report.is_match:
                report.witnesses = [graph6_text(g) for _, g in items]
            reports.append(report)
        return reports

    async def strategy_agreement_reports(self) -> List[VerificationReport]:
        """Operator closure against vertex splitting for every slice up to the cross-check order."""
        reports = []
        for order in range(4, self.limits.cross_check_order + 1):
            for min_degree in (3, 4):
                if min_degree == 4 and order < 6:
                    continue
                outcome = await self.corpus.cross_check(order, min_degree)
                reports.append(VerificationReport.compare(
                    f"generation-strategies-agree/order{order}/min-degree{min_degree}",
                    "counts",
                    "operator closure from K3 agrees with vertex splitting from K4",
                    outcome["agree"],
                    True,
                    evidence=outcome,
                ))
        return reports

    def fwf22_count_reports(self, claim: Dict[str, Any]) -> List[VerificationReport]:
        prose = {int(k): int(v) for k, v in (claim.get("prose") or {}).items()}
        reports = []
        for n in claim["orders"]:
            if n > self.limits.max_order:
                continue
            computed = self.fwf.enumerate_fwf22(n).count(n)
            from_sequences = self.fwf.catalog_from_sequences(n).count(n) if n >= 6 else None
            formula = FwfCatalog.formula(n)
            published = {"formula": formula}
            if n in prose:
                published["prose"] = prose[n]
            evidence = {"sequence_catalog": from_sequences}
            if n in prose and prose[n] != formula:
                status = ClaimStatus.INTERNAL_CONFLICT
                evidence["agrees_with"] = [k for k, v in published.items() if v == computed]
                self.logger.warning(
                    f"(2,2)-FWF order {n}: formula {formula} and narrative {prose[n]} disagree; computed {computed}"
                )
            else:
                status = ClaimStatus.MATCH if computed == formula else ClaimStatus.MISMATCH
            reports.append(VerificationReport(
                f"fwf22-count/order{n}", "counts", claim["reference"], computed, published, status, evidence,
            ))
        return reports

    @staticmethod
    def _single_degree4(graph: PlaneGraph) -> bool:
        degrees = graph.degrees
        return degrees.count(4) == 1 and min(degrees) == 4

    async def single_degree4_report(self, claim: Dict[str, Any]) -> VerificationReport:
        order = int(claim["order"])
        self._require_order(order, "verifying the single degree-4 graph")
        found = [g for _, g in await self._slice_items(order, 4) if self._single_degree4(g)]
        computed = {"count": len(found), "degree_sequences": sorted(g.degree_string for g in found)}
        published = {"count": int(claim["count"]), "degree_sequences": [claim["degree_sequence"]]}
        return VerificationReport.compare(
            "order13-single-degree4", "counts", claim["reference"], computed, published,
            witnesses=[graph6_text(g) for g in found],
        )

    async def absent_single_degree4_reports(self, claim: Dict[str, Any]) -> List[VerificationReport]:
        reports = []
        for order in claim["orders"]:
            if order > self.limits.max_order:
                continue
            found = [g for _, g in await self._slice_items(order, 4) if self._single_degree4(g)]
            reports.append(VerificationReport.compare(
                f"no-single-degree4/order{order}", "counts", claim["reference"], len(found), int(claim["count"]),
                witnesses=[graph6_text(g) for g in found],
            ))
        return reports

    # Partition listings

    async def _listing_report(self, key: str, listing: Dict[str, Any], phase: str) -> VerificationReport:
        validate_listing(key, listing)
        inspection = inspect_listing(listing)
        order = inspection.order
        graphs = await self._slice_items(order, 4)
        if inspection.sequence_usable:
            target = "".join(sorted(inspection.printed_sequence))
            pool = [(c, g) for c, g in graphs if g.degree_string == target]
        else:
            self.logger.warning(f"Listing {key}: {inspection.sequence_problems[0]}; matching over all of order {order}")
            pool = list(graphs)
        candidates = [(c, self.partitions_of(g), range(g.order)) for c, g in pool]
        chosen, match = best_match(inspection, candidates)

        evidence: Dict[str, Any] = {
            "printed_lines": inspection.line_count,
            "distinct_valid_lines": len(inspection.distinct),
            "invalid_lines": inspection.invalid_lines,
            "duplicate_lines": inspection.duplicate_lines,
            "conflicts": inspection.conflicts,
            "candidates": len(pool),
        }
        if match is None:
            return VerificationReport(
                key, phase, f"printed partition listing {key}", None, inspection.stated_count,
                ClaimStatus.MISMATCH, evidence,
            )

        graph = dict(pool)[chosen]
        partitions = self.partitions_of(graph)
        evidence.update({
            "isomorphic": match.isomorphic,
            "all_lines_reproduced": match.embeds,
            "label_map": {str(v): label for v, label in sorted((match.labels or {}).items())},
            "partitions": partitions.to_json(),
            "coloring_identity": self.polys.count_at(graph, 4) == partitions.coloring_count(),
        })
        listed_ok = match.isomorphic if inspection.distinct else True
        if not match.embeds:
            status = ClaimStatus.MISMATCH
        elif inspection.conflicts:
            status = ClaimStatus.INTERNAL_CONFLICT
        elif listed_ok and match.computed_count == inspection.stated_count:
            status = ClaimStatus.MATCH
        else:
            status = ClaimStatus.MISMATCH
        return VerificationReport(
            key, phase, f"printed partition listing {key}", match.computed_count, inspection.stated_count,
            status, evidence, [graph6_text(graph)],
        )

    async def verify_partition_tables(self) -> List[VerificationReport]:
        """Every order 6-10 listing plus the lower-bound row."""
        data = self._load_golden(GOLDEN_LISTINGS_FILE)
        reports = []
        for key, listing in data.get("listings", {}).items():
            if int(listing["order"]) > self.limits.partition_table_order:
                continue
            report = await self._listing_report(key, listing, "partitions")
            self.logger.info(f"Listing {key}: {report.status.value}")
            reports.append(report)
        reports.extend(await self.lower_bound_reports(data["lower_bound"]))
        return reports

    async def lower_bound_reports(self, row: Dict[str, Any]) -> List[VerificationReport]:
        """Fewest partitions among minimum-degree-4 graphs with no independent degree-4 triple."""
        reports = []
        for order, published in sorted((int(k), int(v)) for k, v in row["values"].items()):
            if order > self.limits.partition_table_order:
                continue
            counts = {}
            excluded = 0
            for certificate, graph in await self._slice_items(order, 4):
                if has_independent_degree4_triple(graph):
                    excluded += 1
                    continue
                counts[graph.degree_string] = len(self.partitions_of(graph))
            computed = min(counts.values()) if counts else None
            reports.append(VerificationReport.compare(
                f"partition-lower-bound/order{order}", "partitions", row["reference"], computed, published,
                evidence={"qualifying": counts, "excluded": excluded},
            ))
        return reports

    async def verify_order13(self) -> List[VerificationReport]:
        """The order-13 single degree-4 graph against its printed listing."""
        self._require_order(13, "verifying the order-13 listing")
        data = self._load_golden(GOLDEN_ORDER13_FILE)
        reports = []
        for key, listing in data.get("listing", {}).items():
            reports.append(await self._listing_report(key, listing, "order13"))
        return reports

    # Theorem sweep

    async def theorem_sweep(self) -> List[VerificationReport]:
        """Exhaustive checks of theorem statements over the corpus."""
        graphs = await self._sweep_items(4, self.limits.sweep_order)
        reports = []
        reports.extend(self.structure_reports(graphs))
        reports.extend(self.colored_contraction_reports(graphs))
        reports.extend(await self.min_degree_five_reports())
        reports.extend(await self.monotonicity_reports())
        reports.extend(self.reduction_reports(graphs))
        reports.extend(self.lemma_reports(graphs))
        reports.extend(await self.identity_reports(graphs))
        reports.extend(self.fwf22_sequence_reports())
        return reports

    def structure_reports(self, graphs: Iterable[Tuple[bytes, PlaneGraph]]) -> List[VerificationReport]:
        """Unique colorability, recursiveness and degree-3 structure."""
        unique_iff = SweepTally(
            "unique-iff-recursive", "theorems",
            "a maximal planar graph is uniquely 4-colorable exactly when it is recursive (FWF)",
        )
        positive = SweepTally("four-colorable-positive", "theorems", "f(G, 4) > 0 for every maximal planar graph")
        lower = SweepTally(
            "partition-lower-bound-five", "theorems",
            "minimum-degree-4 graphs of order >= 10 without an independent degree-4 triple have >= 5 partitions",
        )
        delta4 = SweepTally("min-degree-4-not-unique", "theorems", "minimum-degree-4 graphs are not uniquely 4-colorable")
        fwf_degree3 = SweepTally(
            "fwf-degree3-nonadjacent", "theorems",
            "FWF graphs of order >= 5 have at least two degree-3 vertices, pairwise non-adjacent",
        )
        adjacency = SweepTally(
            "degree3-adjacency", "theorems",
            "no graph has exactly two adjacent, or exactly three mutually adjacent, degree-3 vertices",
        )
        single = SweepTally("single-degree3-peels", "theorems", "one degree-3 vertex peels to minimum degree >= 4")
        confluent = SweepTally("peeling-confluent", "theorems", "greedy degree-3 peeling agrees with exhaustive peeling")
        central = SweepTally("fwf22-central-vertex", "theorems", "(2,2)-FWF graphs have a vertex of degree n - 1")
        central.evidence["several_central_vertices"] = 0

        for certificate, graph in graphs:
            n = graph.order
            partitions = self.partitions_of(graph)
            unique = len(partitions) == 1
            recursive = self.fwf.is_fwf(graph) is not None
            unique_iff.record(unique == recursive, graph, order=n, unique=unique, recursive=recursive)

            if n <= self.limits.oracle_order:
                value, method = self.polys.count_at(graph, 4), "chromatic-polynomial"
            else:
                value, method = self.colorings.count_proper_colorings(graph, 4), "backtracking"
            positive.record(value > 0, graph, order=n, value=value, method=method)

            if graph.min_degree == 4:
                delta4.record(not unique, graph, order=n)
                if n >= 10 and not has_independent_degree4_triple(graph):
                    lower.record(len(partitions) >= 5, graph, order=n, partitions=len(partitions))

            low = self.fwf.degree3_vertices(graph)
            if recursive and n >= 5:
                fwf_degree3.record(
                    len(low) >= 2 and not any(graph.adjacent(a, b) for a, b in combinations(low, 2)),
                    graph, order=n, degree3=low,
                )
            if len(low) == 2:
                adjacency.record(not graph.adjacent(*low), graph, order=n, degree3=low)
            elif len(low) == 3:
                triangle = all(graph.adjacent(a, b) for a, b in combinations(low, 2))
                adjacency.record(not triangle, graph, order=n, degree3=low)
            if len(low) == 1 and n > 4:
                peeled = self.fwf.greedy_peel(graph)
                single.record(peeled.min_degree >= 4 and peeled.order > 4, graph, order=n)
            confluent.record(self.fwf.peeling_agrees(graph), graph, order=n)
            if recursive and self.fwf.is_two_two(graph):
                hubs = self.fwf.central_vertices(graph)
                central.record(bool(hubs), graph, order=n)
                if len(hubs) > 1:
                    central.evidence["several_central_vertices"] += 1

        return [t.report() for t in (unique_iff, positive, lower, delta4, fwf_degree3, adjacency, single, confluent, central)]

    def colored_contraction_reports(self, graphs: Iterable[Tuple[bytes, PlaneGraph]]) -> List[VerificationReport]:
        """Partition counts after colored 5- and 6-wheel contractions of uniquely 4-colorable graphs."""
        five = SweepTally(
            "colored-five-contraction", "theorems",
            "colored 5-wheel contraction of a uniquely 4-colorable graph leaves exactly 2 partitions",
        )
        six = SweepTally(
            "colored-six-contraction", "theorems",
            "colored 6-wheel contraction leaves 2 partitions (line, star) or 4 (triangles)",
        )
        five_counts: Counter = Counter()
        six_counts: Counter = Counter()
        for certificate, graph in graphs:
            partitions = self.partitions_of(graph)
            if len(partitions) != 1:
                continue
            coloring = partitions.partitions[0].to_coloring(4)
            for v in range(graph.order):
                degree = graph.degree(v)
                if degree not in (5, 6):
                    continue
                try:
                    result, _, _, six_type = self.wheels.colored_contract(graph, coloring, v)
                except (CannotReachMaximal, NotProper) as e:
                    (five if degree == 5 else six).record(False, graph, vertex=v, error=str(e))
                    continue
                count = len(self.partitions_of(result))
                if degree == 5:
                    five_counts[count] += 1
                    five.record(count == 2, graph, vertex=v, partitions=count)
                else:
                    six_counts[f"{six_type}:{count}"] += 1
                    expected = SIX_WHEEL_PARTITIONS.get(six_type)
                    six.record(count == expected, graph, vertex=v, type=six_type, partitions=count)
        five.evidence["observed"] = {str(k): v for k, v in sorted(five_counts.items())}
        six.evidence["observed"] = dict(sorted(six_counts.items()))
        return [five.report(), six.report()]

    async def min_degree_five_reports(self) -> List[VerificationReport]:
        tally = SweepTally(
            "min-degree-5-configurations", "theorems",
            "minimum-degree-5 graphs are not uniquely 4-colorable and contain a 5-5-5, 5-5-6 or 5-6-6 triangle",
        )
        for order in range(12, self.limits.max_order + 1):
            for certificate, graph in await self._slice_items(order, 5):
                partitions = self.partitions_of(graph)
                patterns = triangle_degree_patterns(graph) & MIN_DEGREE_5_TRIANGLES
                tally.record(
                    len(partitions) >= 2 and bool(patterns), graph,
                    order=order, partitions=len(partitions), triangles=sorted(patterns),
                )
        return [tally.report()]

    async def monotonicity_reports(self) -> List[VerificationReport]:
        """Extending a wheel never loses partitions (reported per wheel size)."""
        reports = []
        sources = await self._sweep_items(4, self.limits.monotonicity_order)
        for k in (3, 4, 5):
            tally = SweepTally(
                f"extension-monotonicity/ext{k}", "theorems",
                f"extend-{k}-wheel does not decrease the number of 4-partitions",
            )
            for certificate, graph in sources:
                before = len(self.partitions_of(graph))
                for site in self.wheels.extension_sites(graph, k):
                    grown = self.wheels.apply_extension(graph, site, k)
                    after = len(self.partitions_of(grown))
                    tally.record(after >= before, graph, site=list(site), before=before, after=after)
            reports.append(tally.report())
        return reports

    def reduction_reports(self, graphs: Iterable[Tuple[bytes, PlaneGraph]]) -> List[VerificationReport]:
        reaches = SweepTally("reduction-to-k3", "theorems", "every maximal planar graph contracts to K3")
        drops = SweepTally("contraction-order-drop", "theorems", "3-wheel contractions drop one vertex, 4- and 5-wheel two")
        k3 = self.triangulations.canonical_certificate(self.triangulations.complete_graph_k3()).hex()
        kinds: Counter = Counter()
        for _, graph in graphs:
            try:
                trace = self.wheels.reduce_to_k3(graph)
            except ReductionStalled as e:
                reaches.record(False, graph, order=graph.order, error=str(e))
                continue
            reaches.record(trace.final_certificate == k3, graph, order=graph.order)
            for step in trace.steps:
                kinds[step.kind] += 1
                drops.record(step.order_drop == ORDER_DROP.get(step.kind), graph, kind=step.kind, drop=step.order_drop)
        reaches.evidence["steps_by_kind"] = {str(k): v for k, v in sorted(kinds.items())}
        return [reaches.report(), drops.report()]

    def lemma_reports(self, graphs: Iterable[Tuple[bytes, PlaneGraph]]) -> List[VerificationReport]:
        """Color-coordinate lemmas and the coloring count identity."""
        groups = SweepTally(
            "variant-vertex-groups", "theorems",
            "a variant vertex touches at most k - 2 invariant groups",
        )
        added = SweepTally(
            "variant-edge-colorable", "theorems",
            "joining a variant vertex to an untouched anchor keeps the graph 4-colorable",
        )
        singleton = SweepTally(
            "universal-singleton", "theorems",
            "removing a universal singleton class keeps unique colorability with one color fewer",
        )
        counting = SweepTally(
            "coloring-count-identity", "theorems",
            "colorings equal the sum of k!/(k - |P|)! over the partitions",
        )
        counting.evidence["restricted_form_applies"] = 0
        counting.evidence["restricted_form_holds"] = 0
        witnessed = 0
        for _, graph in graphs:
            n = graph.order
            if n > self.limits.lemma_order:
                continue
            identity = self.colorings.coloring_count_identity(graph, 4)
            counting.record(bool(identity["sum_holds"]), graph, order=n)
            if identity["restricted_holds"] is not None:
                counting.evidence["restricted_form_applies"] += 1
                counting.evidence["restricted_form_holds"] += int(bool(identity["restricted_holds"]))

            reduced = self.colorings.universal_singleton_check(graph, 4)
            if reduced is not None:
                singleton.record(reduced, graph, order=n)

            witness = self.colorings.uniquely_near_4_witness(graph)
            if witness is None:
                continue
            witnessed += 1
            frame = self.colorings.color_frame(graph, witness.anchors)
            too_many = self.colorings.adjacent_group_violations(graph, frame)
            groups.record(not too_many, graph, order=n, vertices=too_many)
            blocked = self.colorings.added_edge_violations(graph, frame)
            added.record(not blocked, graph, order=n, vertices=blocked)
        groups.evidence["coordinated_graphs"] = witnessed
        return [groups.report(), added.report(), singleton.report(), counting.report()]

    async def identity_reports(self, graphs: List[Tuple[bytes, PlaneGraph]]) -> List[VerificationReport]:
        """Polynomial oracle, contraction identities, golden-ratio identities and quad twists."""
        oracle = SweepTally(
            "oracle-equivalence", "theorems",
            "the chromatic polynomial at k = 0..6 equals the backtracking coloring count",
        )
        golden: Dict[str, SweepTally] = {
            name: SweepTally(name, "theorems", text)
            for name, text in (
                ("golden-identity", "f(G, tau + 2) = sqrt5 tau^(3(n - 3)) f(G, tau^2)^2"),
                ("golden-positivity", "f(G, tau + 2) > 0"),
                ("tau-squared-bound", "|f(G, tau^2)| <= tau^(5 - n)"),
                ("vertex-elimination", "f(G, tau^2) = (-1)^m tau^(1 - m) f(G - v, tau^2) for a hub of degree m"),
            )
        }
        worst = 0.0
        for _, graph in graphs:
            n = graph.order
            if n > self.limits.oracle_order:
                continue
            polynomial = self.polys.chromatic_polynomial(graph)
            mismatched = [
                k for k in range(7)
                if polynomial.evaluate(k) != self.colorings.count_proper_colorings(graph, k)
            ]
            oracle.record(not mismatched, graph, order=n, values=mismatched)
            for check in self.polys.tutte_identity_checks(graph):
                golden[check.name].record(check.holds, graph, order=n, residual=check.residual, detail=check.detail)
                if check.name == "golden-identity":
                    worst = max(worst, check.residual)
        golden["golden-identity"].evidence["worst_residual"] = worst

        four = SweepTally("four-contract-identity", "theorems", "f(G, 4) = f(G1, 4) + f(G2, 4) at degree-4 vertices")
        five = SweepTally("five-contract-identity", "theorems", "the three brackets at a degree-5 vertex sum to f(G, 4)")
        brackets = SweepTally("five-contract-brackets-nonnegative", "theorems", "each bracket is non-negative")
        variants = Counter()
        contract_graphs = await self._sweep_items(6, self.limits.sweep_order, 4)
        if self.limits.max_order >= 12:
            contract_graphs.extend(await self._slice_items(12, 5))
        for _, graph in contract_graphs:
            for v in range(graph.order):
                degree = graph.degree(v)
                if degree == 4:
                    result = self.polys.four_contract_decomposition(graph, v)
                    four.record(
                        result.holds, graph, vertex=v,
                        counts=[result.first_count, result.second_count, result.total],
                    )
                elif degree == 5:
                    result = self.polys.five_contract_decomposition(graph, v)
                    variants[(result.holds, result.holds_alt)] += 1
                    five.record(result.holds or result.holds_alt, graph, vertex=v)
                    brackets.record(
                        result.brackets_nonnegative, graph, vertex=v,
                        brackets=[
                            result.first_bracket, result.second_bracket,
                            result.third_bracket, result.third_bracket_alt,
                        ],
                    )
        five.evidence["variants"] = {
            "third-pair": sum(c for (main, _), c in variants.items() if main),
            "first-pair-reused": sum(c for (_, alt), c in variants.items() if alt),
        }

        tallies = [oracle, *golden.values(), four, five, brackets, *self.quad_twist_tallies(graphs)]
        return [t.report() for t in tallies]

    def quad_twist_tallies(self, graphs: List[Tuple[bytes, PlaneGraph]], sample_size: int = 24) -> List[SweepTally]:
        residual = SweepTally("quad-twist-residual", "theorems", "f(G) - f(flip) - f(contract flip) + f(contract) = 0")
        shifted = SweepTally(
            "quad-twist-shifted", "theorems",
            "f(G, tau^2) + f(flip, tau^2) = tau^-3 (f(contract flip, tau^2) + f(contract, tau^2))",
        )
        pool = [
            (graph, quad)
            for _, graph in graphs
            if 6 <= graph.order <= min(8, self.limits.oracle_order)
            for quad in self.polys.empty_quads(graph)
        ]
        rng = random.Random(self.seed)
        sample = rng.sample(pool, min(sample_size, len(pool)))
        for graph, quad in sample:
            result = self.polys.quad_twist_ops(graph, quad)
            residual.record(result.residual.is_zero(), graph, quad=list(quad))
            for check in result.checks:
                shifted.record(check.holds, graph, quad=list(quad), residual=check.residual)
        return [residual, shifted]

    def fwf22_sequence_reports(self) -> List[VerificationReport]:
        """Sequence-built (2,2)-FWF graphs and the alternative coloring of their star extensions."""
        built = SweepTally(
            "fwf22-sequence-coloring", "theorems",
            "a color sequence builds a (2,2)-FWF graph whose unique 4-partition is the sequence's",
        )
        star = SweepTally(
            "star-extension-not-unique", "theorems",
            "the 4-wheel extension of a (2,2)-FWF graph on x - u - y has a second 4-partition",
        )
        recipes: Counter = Counter()
        seen = set()
        for n in range(6, min(self.limits.sweep_order, self.limits.max_order) + 1):
            for symbols in self.fwf.color_sequences(n):
                graph, coloring = self.fwf.fwf22_from_color_sequence(symbols)
                partitions = self.partitions_of(graph)
                ok = (
                    len(partitions) == 1
                    and partitions.partitions[0] == coloring.to_partition()
                    and self.fwf.is_two_two(graph)
                )
                built.record(ok, graph, sequence=symbols)

                certificate = self.triangulations.canonical_certificate(graph)
                if not ok or n > self.limits.partition_table_order or certificate in seen:
                    continue
                seen.add(certificate)
                try:
                    extension = self.fwf.star_extension_natural_coloring(graph, coloring)
                    recipe, _ = self.fwf.find_alternative(extension)
                except (NoAlternative, NotTwoTwoFwf) as e:
                    star.record(False, graph, sequence=symbols, error=str(e))
                    continue
                recipes[recipe] += 1
                star.record(True)
        star.evidence["recipes"] = dict(sorted(recipes.items()))
        return [built.report(), star.report()]
