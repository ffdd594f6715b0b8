"""Isomorph-free generation of maximal planar graphs."""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from core.interfaces.storage_interface import IStorageService
from core.models.corpus import Corpus, CorpusSlice
from core.models.errors import CapExceeded, PlanarGraphError
from core.models.plane_graph import PlaneGraph
from core.services.triangulation_service import TriangulationService
from core.services.wheel_service import (
    WheelService,
    extend_double,
    extend_face,
    extend_funnel,
    extend_path,
)
from core.utils.constants import DEFAULT_MAX_ORDER, MIN_DEGREE_CHOICES
from core.utils.helpers import chunked
from core.utils.plane_canon import canonical_labeling
from infrastructure.storage.graph_codecs import encode_graph6


Level = Dict[bytes, PlaneGraph]

STRATEGIES = ("operators", "splitting")


def _grow(graph: PlaneGraph, site: Tuple[int, ...], k: int) -> PlaneGraph:
    if k == 3:
        return extend_face(graph, site)
    if k == 4:
        return extend_path(graph, *site)
    if k == 5:
        return extend_funnel(graph, *site)
    x, u, y = site
    return extend_double(graph, u, x, y)


def extend_chunk(graphs: Sequence[PlaneGraph], kind: int, min_degree: int) -> List[Tuple[bytes, PlaneGraph]]:
    """Apply every inequivalent extension of one kind; keep results with the degree bound."""
    wheel = WheelService()
    found: Level = {}
    for graph in graphs:
        for site in wheel.extension_sites(graph, kind):
            grown = _grow(graph, site, kind)
            if grown.min_degree < min_degree:
                continue
            certificate = canonical_labeling(grown).certificate
            found.setdefault(certificate, grown)
    return list(found.items())


def split_chunk(graphs: Sequence[PlaneGraph], min_degree: int) -> List[Tuple[bytes, PlaneGraph]]:
    """Split every vertex along every pair of its neighbors."""
    triangulations = TriangulationService()
    found: Level = {}
    for graph in graphs:
        for s in range(graph.order):
            for p, q in combinations(graph.neighbors(s), 2):
                grown = triangulations.split_vertex(graph, s, p, q)
                if grown.min_degree < min_degree:
                    continue
                certificate = canonical_labeling(grown).certificate
                found.setdefault(certificate, grown)
    return list(found.items())


class CorpusService:
    """Builds corpus slices by extension closure from K3 or by vertex splitting from K4."""

    def __init__(
        self,
        triangulation_service: Optional[TriangulationService] = None,
        storage_service: Optional[IStorageService] = None,
        workers: int = 1,
        max_order: int = DEFAULT_MAX_ORDER,
        chunk_size: int = 64,
    ):
        self.logger = logging.getLogger(__name__)
        self.triangulations = triangulation_service or TriangulationService()
        self.storage = storage_service
        self.workers = max(1, workers)
        self.max_order = max_order
        self.chunk_size = chunk_size
        self.corpus = Corpus()
        self._levels: Dict[str, Dict[int, Level]] = {strategy: {} for strategy in STRATEGIES}

    def _handle_error(self, operation: str, error: Exception) -> None:
        """Centralized error handling and logging."""
        self.logger.error(f"Error {operation}: {str(error)}")
        raise error

    def _check_request(self, order: int, min_degree: int) -> None:
        if min_degree not in MIN_DEGREE_CHOICES:
            self._handle_error(
                "validating corpus request",
                CapExceeded(f"Minimum degree {min_degree} not in {MIN_DEGREE_CHOICES}"),
            )
        if order < 3 or order > self.max_order:
            self._handle_error(
                "validating corpus request",
                CapExceeded(f"Order {order} outside 3..{self.max_order}"),
            )

    # Fan-out

    async def _fan_out(self, graphs: List[PlaneGraph], task, *args) -> Level:
        """Run ``task`` over chunks of ``graphs``; merge results by certificate."""
        merged: Level = {}
        chunks = list(chunked(graphs, self.chunk_size))
        if not chunks:
            return merged
        if self.workers == 1:
            for chunk in chunks:
                for certificate, graph in task(chunk, *args):
                    merged.setdefault(certificate, graph)
            return merged

        semaphore = asyncio.Semaphore(self.workers)
        loop = asyncio.get_running_loop()

        with ProcessPoolExecutor(max_workers=self.workers) as pool:

            async def run_chunk(chunk):
                async with semaphore:
                    return await loop.run_in_executor(pool, task, list(chunk), *args)

            results = await asyncio.gather(*[run_chunk(chunk) for chunk in chunks])

        for result in results:
            for certificate, graph in result:
                merged.setdefault(certificate, graph)
        return merged

    # Operator closure

    async def _operator_level(self, order: int, min_degree: int = 3) -> Level:
        """Order-``order`` triangulations; full levels (min_degree 3) are cached."""
        cache = self._levels["operators"]
        if min_degree == 3 and order in cache:
            return cache[order]
        if order < 3:
            return {}
        if order == 3:
            k3 = self.triangulations.complete_graph_k3()
            level = {self.triangulations.canonical_certificate(k3): k3}
            cache[3] = level
            return level

        found: Level = {}
        sources = [(order - 1, 3), (order - 2, 4), (order - 2, 5), (order - 3, 2)]
        for source_order, kind in sources:
            if min_degree >= 4 and kind == 3:
                continue
            if min_degree >= 5 and kind != 5:
                continue
            if source_order < 3:
                continue
            base = await self._operator_level(source_order)
            for certificate, graph in (await self._fan_out(list(base.values()), extend_chunk, kind, min_degree)).items():
                found.setdefault(certificate, graph)

        self.logger.info(f"Order {order} (min degree >= {min_degree}): {len(found)} graphs")
        if min_degree == 3:
            cache[order] = found
        return found

    async def _splitting_level(self, order: int, min_degree: int = 3) -> Level:
        cache = self._levels["splitting"]
        if min_degree == 3 and order in cache:
            return cache[order]
        if order < 4:
            return await self._operator_level(order)
        if order == 4:
            k4 = self.triangulations.complete_graph_k4()
            level = {self.triangulations.canonical_certificate(k4): k4}
            cache[4] = level
            return level
        base = await self._splitting_level(order - 1)
        found = await self._fan_out(list(base.values()), split_chunk, min_degree)
        self.logger.info(f"Order {order} by splitting (min degree >= {min_degree}): {len(found)} graphs")
        if min_degree == 3:
            cache[order] = found
        return found

    async def build_slice(self, order: int, min_degree: int = 3, strategy: str = "operators") -> CorpusSlice:
        """Generate (or reload) every triangulation of ``order`` with the degree bound.

        Raises:
            CapExceeded: If order or minimum degree is out of range
        """
        self._check_request(order, min_degree)
        if strategy not in STRATEGIES:
            self._handle_error("building corpus slice", CapExceeded(f"Unknown strategy {strategy!r}"))
        if strategy == "operators" and (order, min_degree) in self.corpus:
            return self.corpus.get(order, min_degree)

        if strategy == "operators" and self.storage is not None:
            lines = self.storage.load_slice(order, min_degree)
            if lines is not None:
                corpus_slice = self._slice_from_lines(order, min_degree, lines)
                self.corpus.add(corpus_slice)
                return corpus_slice

        if strategy == "operators":
            level = await self._operator_level(order, min_degree)
        else:
            level = await self._splitting_level(order, min_degree)
        level = {c: g for c, g in level.items() if g.min_degree >= min_degree}
        canonical = {c: self.triangulations.canonical_form(g) for c, g in level.items()}
        corpus_slice = CorpusSlice.from_mapping(order, min_degree, canonical, strategy)

        if strategy == "operators":
            self.corpus.add(corpus_slice)
            if self.storage is not None:
                self.storage.save_slice(order, min_degree, [encode_graph6(g) for g in corpus_slice])
        return corpus_slice

    def _slice_from_lines(self, order: int, min_degree: int, lines: Iterable[bytes]) -> CorpusSlice:
        graphs: Level = {}
        for line in lines:
            try:
                graph = self.triangulations.decode_graph6(line)
            except PlanarGraphError as e:
                self._handle_error(f"reloading checkpoint for order {order}", e)
            graphs[self.triangulations.canonical_certificate(graph)] = self.triangulations.canonical_form(graph)
        return CorpusSlice.from_mapping(order, min_degree, graphs, "operators")

    def enumerate_mpg(self, order: int, min_degree: int = 3, strategy: str = "operators") -> CorpusSlice:
        """Synchronous entry point for :meth:`build_slice`."""
        return asyncio.run(self.build_slice(order, min_degree, strategy))

    async def cross_check(self, order: int, min_degree: int = 3) -> Dict[str, object]:
        """Compare operator closure with vertex splitting for one slice."""
        operators = await self.build_slice(order, min_degree, "operators")
        splitting = await self.build_slice(order, min_degree, "splitting")
        only_operators = operators.certificate_set() - splitting.certificate_set()
        only_splitting = splitting.certificate_set() - operators.certificate_set()
        if only_operators or only_splitting:
            self.logger.warning(
                f"Strategies disagree at order {order}, min degree {min_degree}: "
                f"{len(only_operators)} vs {len(only_splitting)} unmatched"
            )
        return {
            "order": order,
            "min_degree": min_degree,
            "operators": len(operators),
            "splitting": len(splitting),
            "agree": not only_operators and not only_splitting,
            "only_operators": sorted(c.hex() for c in only_operators),
            "only_splitting": sorted(c.hex() for c in only_splitting),
        }
