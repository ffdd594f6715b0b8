"""Recursive maximal planar graphs: peeling, (2,2)-FWF catalogs and star extensions."""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

from core.models.coloring import Coloring
from core.models.errors import BadPrefix, NoAlternative, NoLegalFace, NotTwoTwoFwf
from core.models.fwf import ColorSequence, FwfCatalog, StarExtension
from core.models.plane_graph import PlaneGraph
from core.services.coloring_service import ColoringService
from core.services.triangulation_service import TriangulationService
from core.services.wheel_service import extend_face, extend_path
from core.utils.constants import COLOR_INDEX, COLOR_LETTERS, FWF22_PREFIX


class FwfService:
    """Recognition and construction of FWF graphs."""

    def __init__(
        self,
        triangulation_service: Optional[TriangulationService] = None,
        coloring_service: Optional[ColoringService] = None,
    ):
        self.logger = logging.getLogger(__name__)
        self.triangulations = triangulation_service or TriangulationService()
        self.colorings = coloring_service or ColoringService()

    def _handle_error(self, operation: str, error: Exception) -> None:
        """Centralized error handling and logging."""
        self.logger.error(f"Error {operation}: {str(error)}")
        raise error

    # Recognition

    @staticmethod
    def degree3_vertices(graph: PlaneGraph) -> List[int]:
        return [v for v in range(graph.order) if graph.degree(v) == 3]

    def is_fwf(self, graph: PlaneGraph) -> Optional[List[int]]:
        """Degree-3 deletions (original ids) that reach K4, or None.

        Every removal choice is explored; certificates of dead ends are
        remembered.
        """
        failed: Set[bytes] = set()

        def search(current: PlaneGraph, ids: List[int]) -> Optional[List[int]]:
            if current.order == 4:
                return []
            if current.order < 4:
                return None
            certificate = self.triangulations.canonical_certificate(current)
            if certificate in failed:
                return None
            for v in self.degree3_vertices(current):
                reduced, mapping = self.triangulations.delete_vertex_mapped(current, v)
                inverse = [0] * reduced.order
                for old, new in mapping.items():
                    inverse[new] = ids[old]
                rest = search(reduced, inverse)
                if rest is not None:
                    return [ids[v]] + rest
            failed.add(certificate)
            return None

        return search(graph, list(range(graph.order)))

    def greedy_peel(self, graph: PlaneGraph) -> PlaneGraph:
        """Delete the smallest-id degree-3 vertex while one exists and order > 4."""
        current = graph
        while current.order > 4:
            candidates = self.degree3_vertices(current)
            if not candidates:
                break
            current = self.triangulations.delete_vertex(current, candidates[0])
        return current

    def peeling_agrees(self, graph: PlaneGraph) -> bool:
        """Greedy peeling reaches K4 exactly when exhaustive peeling does."""
        return (self.greedy_peel(graph).order == 4) == (self.is_fwf(graph) is not None)

    def is_two_two(self, graph: PlaneGraph) -> bool:
        """Exactly two degree-3 vertices, at distance 2, in an FWF graph."""
        low = self.degree3_vertices(graph)
        if len(low) != 2 or graph.adjacent(*low):
            return False
        if not set(graph.neighbors(low[0])) & set(graph.neighbors(low[1])):
            return False
        return self.is_fwf(graph) is not None

    @staticmethod
    def central_vertices(graph: PlaneGraph) -> List[int]:
        return [v for v in range(graph.order) if graph.degree(v) == graph.order - 1]

    # Color sequences

    def _check_prefix(self, sequence: ColorSequence) -> None:
        bad = sequence.invalid_symbols()
        if bad:
            raise BadPrefix(f"Symbols {bad} are not in {COLOR_LETTERS!r}")
        n = len(sequence)
        expected = FWF22_PREFIX if n >= 6 else FWF22_PREFIX[:5]
        if n < 5 or not sequence.symbols.startswith(expected):
            raise BadPrefix(f"Sequence {sequence} must start with {expected!r} (length >= 5)")

    def fwf22_from_color_sequence(self, symbols: str) -> Tuple[PlaneGraph, Coloring]:
        """Build the (2,2)-FWF graph encoded by a color sequence.

        Vertices 0..3 carry labels 1..4 of K4 with vertex 3 central; vertex
        4 sits in the face {1, 2, 3}. Each later vertex goes into the face
        spanned by its predecessor, the central vertex and the predecessor
        neighbor whose color differs from the new symbol.

        Raises:
            BadPrefix, NoLegalFace
        """
        sequence = ColorSequence(symbols)
        try:
            self._check_prefix(sequence)
        except BadPrefix as e:
            self._handle_error(f"building graph from {symbols!r}", e)
        colors = sequence.colors
        graph = self.triangulations.complete_graph_k4()
        u = 3
        graph = extend_face(graph, self.triangulations.find_face(graph, (u, 1, 2)))
        attach = {4: (1, 2)}
        for i in range(5, len(colors)):
            p = i - 1
            a, b = attach[p]
            symbol = colors[i]
            if symbol == colors[b]:
                face, kept = (p, u, a), a
            elif symbol == colors[a]:
                face, kept = (p, u, b), b
            else:
                self._handle_error(
                    f"building graph from {symbols!r}",
                    NoLegalFace(
                        f"Symbol {symbols[i]!r} at position {i + 1} matches neither "
                        f"{COLOR_LETTERS[colors[a] - 1]!r} nor {COLOR_LETTERS[colors[b] - 1]!r}"
                    ),
                )
            graph = extend_face(graph, self.triangulations.find_face(graph, face))
            attach[i] = (p, kept)
        coloring = Coloring({v: c for v, c in enumerate(colors)}, 4)
        return graph, coloring

    def legal_symbols(self, symbols: str) -> List[str]:
        """Symbols that may follow a valid sequence, in alphabet order."""
        colors = ColorSequence(symbols).colors
        n = len(colors)
        if n < 5:
            return []
        a, b = 1, 2
        for i in range(5, n):
            a, b = (i - 1, a) if colors[i] == colors[b] else (i - 1, b)
        return sorted({COLOR_LETTERS[colors[a] - 1], COLOR_LETTERS[colors[b] - 1]}, key=COLOR_LETTERS.index)

    def color_sequences(self, n: int) -> List[str]:
        """Every valid color sequence of length ``n``."""
        if n < 5:
            return []
        level = [FWF22_PREFIX[:5]] if n == 5 else [FWF22_PREFIX]
        while len(level[0]) < n:
            level = [s + c for s in level for c in self.legal_symbols(s)]
        return level

    # Catalogs

    def enumerate_fwf22(self, n: int) -> FwfCatalog:
        """All (2,2)-FWF graphs of order ``n`` by face insertion from K4."""
        level: Dict[bytes, PlaneGraph] = {}
        k4 = self.triangulations.complete_graph_k4()
        level[self.triangulations.canonical_certificate(k4)] = k4
        for order in range(5, n + 1):
            nxt: Dict[bytes, PlaneGraph] = {}
            for graph in level.values():
                for face in {tuple(sorted(f)): f for f in graph.faces}.values():
                    grown = extend_face(graph, face)
                    certificate = self.triangulations.canonical_certificate(grown)
                    nxt.setdefault(certificate, grown)
            level = nxt
            self.logger.debug(f"FWF order {order}: {len(level)} graphs")
        found = sorted(c.hex() for c, g in level.items() if self.is_two_two(g))
        catalog = FwfCatalog(entries={n: found})
        formula = FwfCatalog.formula(n)
        if formula is not None and formula != len(found):
            self.logger.warning(
                f"(2,2)-FWF count at order {n}: computed {len(found)}, closed form {formula}"
            )
        return catalog

    def catalog_from_sequences(self, n: int) -> FwfCatalog:
        """(2,2)-FWF graphs reachable from color sequences, deduplicated."""
        certificates: Dict[str, str] = {}
        for symbols in self.color_sequences(n):
            graph, _ = self.fwf22_from_color_sequence(symbols)
            key = self.triangulations.canonical_certificate(graph).hex()
            certificates.setdefault(key, symbols)
        return FwfCatalog(
            entries={n: sorted(certificates)},
            sequences={n: {key: certificates[key] for key in sorted(certificates)}},
        )

    # Star extensions

    def _natural_colors(self, graph: PlaneGraph, coloring: Optional[Coloring]) -> Coloring:
        if coloring is not None:
            return coloring
        partitions = self.colorings.enumerate_partitions(graph, 4, limit=2)
        if len(partitions) != 1:
            raise NotTwoTwoFwf("Graph is not uniquely 4-colorable")
        return partitions.partitions[0].to_coloring(4)

    def star_extension_natural_coloring(
        self, graph: PlaneGraph, coloring: Optional[Coloring] = None
    ) -> StarExtension:
        """Extend-4-wheel on x - u - y and color it naturally.

        The copy of u takes the arc of u's rotation that holds the smaller
        ring neighbor of x.

        Raises:
            NotTwoTwoFwf
        """
        if not self.is_two_two(graph):
            self._handle_error(
                "building star extension",
                NotTwoTwoFwf(f"{graph} is not a (2,2)-FWF graph"),
            )
        x, y = self.degree3_vertices(graph)
        common = set(graph.neighbors(x)) & set(graph.neighbors(y))
        u = max(sorted(common), key=graph.degree)
        base_colors = self._natural_colors(graph, coloring)
        ring = [w for w in graph.neighbors(x) if w != u]
        first, second = (y, x) if graph.next_around(u, x) == min(ring) else (x, y)
        extended = extend_path(graph, first, u, second)
        u_copy, center = graph.order, graph.order + 1
        assignment = dict(base_colors.assignment)
        assignment[u_copy] = base_colors[u]
        used = {base_colors[x], base_colors[u], base_colors[y]}
        assignment[center] = min(c for c in range(1, 5) if c not in used)
        natural = Coloring(assignment, 4)
        if not natural.is_proper(extended.to_networkx()):
            raise NotTwoTwoFwf("Natural coloring of the star extension is not proper")
        return StarExtension(graph, extended, natural, x, u, y, u_copy, center)

    def alternative_coloring(self, extension: StarExtension) -> Coloring:
        return self.find_alternative(extension)[1]

    def find_alternative(self, extension: StarExtension) -> Tuple[str, Coloring]:
        """A proper coloring of G*xuy whose partition differs from the natural one.

        Returns the name of the recipe that produced it.

        Raises:
            NoAlternative
        """
        g = extension.graph.to_networkx()
        natural = extension.coloring
        target = natural.to_partition()
        for name, recipe in (
            ("free-center", self._recolor_center),
            ("adjacent-swap", self._adjacent_recipe),
            ("cascade", self._cascade_recipe),
        ):
            candidate = recipe(extension, g)
            if candidate is None:
                continue
            if candidate.is_proper(g) and candidate.to_partition() != target:
                self.logger.debug(f"Alternative coloring via {name}")
                return name, candidate
        for partition in self.colorings.enumerate_partitions(g, 4, limit=2):
            if partition != target:
                return "exhaustive", partition.to_coloring(4)
        self._handle_error(
            "finding alternative coloring",
            NoAlternative(f"G*xuy on {extension.site} is uniquely 4-colorable"),
        )

    @staticmethod
    def _recolor_center(extension: StarExtension, g) -> Optional[Coloring]:
        f = extension.coloring
        if f[extension.x] != f[extension.y]:
            return None
        free = [c for c in range(1, 5) if c not in (f[extension.x], f[extension.u], f[extension.center])]
        if not free:
            return None
        result = f.copy()
        result.assignment[extension.center] = free[0]
        return result

    @staticmethod
    def _adjacent_recipe(extension: StarExtension, g) -> Optional[Coloring]:
        """x and y take the color of u; u and u' take the colors of v and x.

        Tries u with the color of v first, then u'.
        """
        f = extension.coloring
        x, u, y, u2, v = extension.x, extension.u, extension.y, extension.u_copy, extension.center
        if f[x] == f[y]:
            return None
        for keeper, copy in ((u, u2), (u2, u)):
            result = f.copy()
            result.assignment[keeper] = f[v]
            result.assignment[copy] = f[x]
            result.assignment[x] = f[u]
            result.assignment[y] = f[u]
            result.assignment[v] = f[y]
            if result.is_proper(g):
                return result
        return None

    @staticmethod
    def _cascade_recipe(extension: StarExtension, g) -> Optional[Coloring]:
        f = extension.coloring
        x, u, u2 = extension.x, extension.u, extension.u_copy
        by_color: Dict[int, List[int]] = {}
        for w in sorted(g.neighbors(x)):
            by_color.setdefault(f[w], []).append(w)
        singles = [ws[0] for c, ws in sorted(by_color.items()) if len(ws) == 1 and ws[0] not in (u, u2)]
        if not singles:
            return None
        w2 = singles[0]
        old_x = f[x]
        result = f.copy()
        result.assignment[x] = f[w2]
        result.assignment[w2] = f[u]
        result.assignment[u2] = old_x
        for w in g.neighbors(u2):
            if w != x and f[w] == old_x:
                result.assignment[w] = f[u]
        return result
