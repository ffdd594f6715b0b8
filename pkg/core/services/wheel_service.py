"""Wheel extension and contraction operations."""

import hashlib
import logging
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from core.models.coloring import Coloring
from core.models.errors import (
    AdjacentPair,
    BadSite,
    CannotReachMaximal,
    NoCommonFace,
    NotProper,
    NoValidPair,
    PlanarGraphError,
    ReductionStalled,
    TraceMismatch,
    UnknownVertex,
    WrongDegree,
)
from core.models.plane_graph import PlaneGraph
from core.models.wheel import ContractionStep, ContractionTrace
from core.services.triangulation_service import TriangulationService
from core.utils.helpers import insert_after, replace_in_row, rows_of, split_rotation


Site = Tuple[int, ...]


def graph_digest(graph: PlaneGraph) -> str:
    """Fingerprint of the labeled rotation system."""
    return hashlib.sha256(repr(graph.rotations).encode("ascii")).hexdigest()


def _finish(rows: Dict[int, List[int]]) -> PlaneGraph:
    return PlaneGraph(tuple(tuple(rows[v]) for v in range(len(rows))))


def extend_face(graph: PlaneGraph, face: Sequence[int]) -> PlaneGraph:
    """Insert a degree-3 vertex into the traced triangle ``face``."""
    a, b, c = face
    z = graph.order
    rows = rows_of(graph)
    rows[b] = insert_after(rows[b], a, z)
    rows[c] = insert_after(rows[c], b, z)
    rows[a] = insert_after(rows[a], c, z)
    rows[z] = [a, c, b]
    return _finish(rows)


def extend_path(graph: PlaneGraph, x: int, u: int, y: int) -> PlaneGraph:
    """Split ``u`` along ``x - u - y`` and add a degree-4 center.

    ``u`` keeps the arc from ``x`` to ``y``; the copy (id ``n``) takes the
    arc from ``y`` to ``x``; the center gets id ``n + 1``.
    """
    arc_a, arc_b = split_rotation(graph.neighbors(u), x, y)
    u2, v = graph.order, graph.order + 1
    rows = rows_of(graph)
    rows[u] = [x] + arc_a + [y, v]
    rows[u2] = [y] + arc_b + [x, v]
    rows[v] = [x, u, y, u2]
    rows[x] = replace_in_row(rows[x], u, (u, v, u2))
    rows[y] = replace_in_row(rows[y], u, (u2, v, u))
    for w in arc_b:
        rows[w] = replace_in_row(rows[w], u, (u2,))
    return _finish(rows)


def extend_funnel(graph: PlaneGraph, t: int, s: int, b1: int, b2: int) -> PlaneGraph:
    """Split stem ``s`` between top ``t`` and the face ``s b1 b2``; add a degree-5 center.

    ``b1`` must follow ``b2`` in the rotation of ``s``. The copy of ``s``
    gets id ``n`` and the center id ``n + 1``.
    """
    arc_p, rest = split_rotation(graph.neighbors(s), t, b2)
    arc_q = rest[1:]
    s2, v = graph.order, graph.order + 1
    rows = rows_of(graph)
    rows[s] = [t] + arc_p + [b2, v]
    rows[s2] = [b1] + arc_q + [t, v]
    rows[v] = [t, s, b2, b1, s2]
    rows[t] = replace_in_row(rows[t], s, (s, v, s2))
    rows[b2] = insert_after(rows[b2], b1, v)
    rows[b1] = replace_in_row(rows[b1], s, (s2, v))
    for w in arc_q:
        rows[w] = replace_in_row(rows[w], s, (s2,))
    return _finish(rows)


def extend_double(graph: PlaneGraph, a: int, o: int, y: int) -> PlaneGraph:
    """Extend-2 on the edge ``a o`` followed by extend-4 across the new digon.

    ``a`` is split along ``o - a - y`` and the gap is filled by two adjacent
    degree-4 vertices: ``b`` (id ``n + 1``) next to ``o`` and ``v`` (id
    ``n + 2``) next to ``y``. The copy of ``a`` gets id ``n``.
    """
    arc_a, arc_b = split_rotation(graph.neighbors(a), o, y)
    a2, b, v = graph.order, graph.order + 1, graph.order + 2
    rows = rows_of(graph)
    rows[a] = [o] + arc_a + [y, v, b]
    rows[a2] = [y] + arc_b + [o, b, v]
    rows[b] = [o, a, v, a2]
    rows[v] = [b, a, y, a2]
    rows[o] = replace_in_row(rows[o], a, (a, b, a2))
    rows[y] = replace_in_row(rows[y], a, (a2, v, a))
    for w in arc_b:
        rows[w] = replace_in_row(rows[w], a, (a2,))
    return _finish(rows)


class WheelService:
    """Extend/contract k-wheels, colored contractions and K3 reduction."""

    def __init__(self, triangulation_service: Optional[TriangulationService] = None):
        self.logger = logging.getLogger(__name__)
        self.triangulations = triangulation_service or TriangulationService()

    def _handle_error(self, operation: str, error: Exception) -> None:
        """Centralized error handling and logging."""
        self.logger.error(f"Error {operation}: {str(error)}")
        raise error

    # Extension sites

    def extension_sites(self, graph: PlaneGraph, k: int, prune: bool = True) -> List[Site]:
        """All extension sites of kind ``k``, one per automorphism orbit when pruning.

        Sites are faces for k=3, paths ``(x, u, y)`` for k=4 and for the
        double extension (k=2), funnels ``(t, s, b1, b2)`` for k=5.
        """
        sites: List[Tuple[Site, Tuple[int, ...]]] = []
        if k == 3:
            for face in graph.faces:
                sites.append((face, tuple(sorted(face))))
        elif k in (2, 4):
            for u in range(graph.order):
                for x, y in combinations(sorted(graph.neighbors(u)), 2):
                    sites.append(((x, u, y), (u, x, y)))
        elif k == 5:
            for s in range(graph.order):
                for b2 in graph.neighbors(s):
                    b1 = graph.next_around(s, b2)
                    for t in graph.neighbors(s):
                        if t in (b1, b2):
                            continue
                        sites.append(((t, s, b1, b2), (t, s, min(b1, b2), max(b1, b2))))
        else:
            raise BadSite(f"No extension of kind {k}")
        if not prune:
            return [site for site, _ in sites]
        perms = self.triangulations.automorphisms(graph)
        seen: Set[Tuple[int, ...]] = set()
        kept = []
        for site, key in sites:
            orbit_key = min(self._map_key(key, perm, k) for perm in perms)
            if orbit_key in seen:
                continue
            seen.add(orbit_key)
            kept.append(site)
        return kept

    @staticmethod
    def _map_key(key: Tuple[int, ...], perm: Sequence[int], k: int) -> Tuple[int, ...]:
        if k == 3:
            return tuple(sorted(perm[v] for v in key))
        if k in (2, 4):
            u, x, y = key
            return (perm[u],) + tuple(sorted((perm[x], perm[y])))
        t, s, b1, b2 = key
        return (perm[t], perm[s]) + tuple(sorted((perm[b1], perm[b2])))

    def _check_path(self, graph: PlaneGraph, site: Site) -> Tuple[int, int, int]:
        if len(site) != 3:
            raise BadSite(f"Path site needs 3 vertices, got {site}")
        x, u, y = site
        if not graph.has_vertex(u) or x == y:
            raise BadSite(f"Invalid path {site}")
        if not (graph.has_vertex(x) and graph.has_vertex(y)):
            raise BadSite(f"Invalid path {site}")
        if not (graph.adjacent(u, x) and graph.adjacent(u, y)):
            raise BadSite(f"{site} is not a path through {u}")
        return x, u, y

    def _check_funnel(self, graph: PlaneGraph, site: Site) -> Tuple[int, int, int, int]:
        if len(site) != 4:
            raise BadSite(f"Funnel site needs 4 vertices, got {site}")
        t, s, b1, b2 = site
        if not all(graph.has_vertex(w) for w in site) or len(set(site)) != 4:
            raise BadSite(f"Invalid funnel {site}")
        if not all(graph.adjacent(s, w) for w in (t, b1, b2)):
            raise BadSite(f"Funnel {site}: top and bottoms must neighbor the stem")
        if graph.next_around(s, b2) == b1:
            return t, s, b1, b2
        if graph.next_around(s, b1) == b2:
            return t, s, b2, b1
        raise BadSite(f"Funnel {site}: stem and bottoms do not bound a face")

    def apply_extension(self, graph: PlaneGraph, site: Site, k: int) -> PlaneGraph:
        """Extension result only (no step record); used by generation loops."""
        if k == 3:
            face = self.triangulations.find_face(graph, site)
            if len(face) != 3:
                raise BadSite(f"Face {site} is not a triangle")
            return extend_face(graph, face)
        if k == 4:
            return extend_path(graph, *self._check_path(graph, site))
        if k == 5:
            return extend_funnel(graph, *self._check_funnel(graph, site))
        if k == 2:
            x, u, y = self._check_path(graph, site)
            return extend_double(graph, u, x, y)
        raise BadSite(f"No extension of kind {k}")

    def extend_wheel(self, graph: PlaneGraph, site: Site, k: int) -> Tuple[PlaneGraph, ContractionStep]:
        """Extend a k-wheel at ``site``.

        Returns:
            The extended graph and the contraction step that undoes it.
        """
        try:
            extended = self.apply_extension(graph, site, k)
        except PlanarGraphError as e:
            if not isinstance(e, BadSite):
                e = BadSite(str(e))
            self._handle_error(f"extending {k}-wheel at {site}", e)
        n = graph.order
        if k == 3:
            centers, merges = [n], []
        elif k == 4:
            centers, merges = [n + 1], [[site[1], n]]
        elif k == 5:
            centers, merges = [n + 1], [[site[1], n]]
        else:
            centers, merges = [n + 2, n + 1], [[site[1], n]]
        vertex_map = {w: w for w in range(n)}
        for keep, copy in merges:
            vertex_map[copy] = keep
        step = self._record(k, extended, centers, merges, graph, vertex_map)
        return extended, step

    # Contraction

    def _remove_and_merge(
        self, graph: PlaneGraph, centers: Sequence[int], merges: Sequence[Sequence[int]]
    ) -> Tuple[PlaneGraph, Dict[int, int]]:
        current = graph
        vertex_map = {w: w for w in range(graph.order)}
        for center in centers:
            removed = vertex_map.pop(center)
            current, step_map = self.triangulations.delete_vertex_mapped(current, removed)
            vertex_map = {old: step_map[new] for old, new in vertex_map.items()}
        for group in merges:
            keep = min(group)
            for other in sorted(group):
                if other == keep or vertex_map[other] == vertex_map[keep]:
                    continue
                current, step_map = self.triangulations.identify_vertices_mapped(
                    current, vertex_map[keep], vertex_map[other]
                )
                vertex_map = {old: step_map[new] for old, new in vertex_map.items()}
        return current, vertex_map

    def _record(
        self,
        kind: int,
        graph: PlaneGraph,
        centers: Sequence[int],
        merges: Sequence[Sequence[int]],
        result: PlaneGraph,
        vertex_map: Dict[int, int],
        coloring_before: Optional[Coloring] = None,
        coloring_after: Optional[Coloring] = None,
        six_wheel_type: Optional[str] = None,
    ) -> ContractionStep:
        affected = set(centers)
        for group in merges:
            affected |= set(group)
        local = set(affected)
        for w in affected:
            local |= set(graph.neighbors(w))
        site_data = {
            "centers": list(centers),
            "pre_order": graph.order,
            "post_order": result.order,
            "local_rotations": {str(w): list(graph.neighbors(w)) for w in sorted(local)},
            "vertex_map": {str(old): new for old, new in sorted(vertex_map.items())},
            "pre_certificate": self.triangulations.canonical_certificate(graph).hex(),
            "post_certificate": self.triangulations.canonical_certificate(result).hex(),
            "post_digest": graph_digest(result),
        }
        return ContractionStep(
            kind=kind,
            center=centers[0],
            merged_pairs=[sorted(group) for group in merges],
            coloring_before=coloring_before,
            coloring_after=coloring_after,
            site_data=site_data,
            six_wheel_type=six_wheel_type,
        )

    def _link_pairs(self, graph: PlaneGraph, v: int, gap: int) -> List[Tuple[int, int]]:
        ring = graph.link(v)
        d = len(ring)
        pairs = set()
        for i in range(d):
            a, b = ring[i], ring[(i + gap) % d]
            pairs.add((min(a, b), max(a, b)))
        return sorted(pairs)

    def contraction_candidates(self, graph: PlaneGraph, v: int, k: int) -> List[Tuple[int, int]]:
        """Link pairs (or degree-4 partners for k=2) that contract to a triangulation."""
        valid = []
        if k == 2:
            for partner in sorted(graph.neighbors(v)):
                if graph.degree(partner) != 4:
                    continue
                try:
                    result, _ = self._double_contraction(graph, v, partner)
                except PlanarGraphError:
                    continue
                if result.is_triangulation() and result.order == graph.order - 3:
                    valid.append((v, partner))
            return valid
        for pair in self._link_pairs(graph, v, 2):
            if graph.adjacent(*pair):
                continue
            try:
                result, _ = self._remove_and_merge(graph, [v], [pair])
            except (AdjacentPair, NoCommonFace):
                continue
            if result.is_triangulation():
                valid.append(pair)
        return valid

    def _double_contraction(
        self, graph: PlaneGraph, v: int, partner: int
    ) -> Tuple[PlaneGraph, Dict[int, int]]:
        common = sorted(set(graph.neighbors(v)) & set(graph.neighbors(partner)))
        if len(common) != 2 or graph.adjacent(*common):
            raise NoValidPair(f"Edge {v}-{partner} does not carry a double extension")
        return self._remove_and_merge(graph, [v, partner], [common])

    def contract_wheel(
        self,
        graph: PlaneGraph,
        v: int,
        k: Optional[int] = None,
        pair: Optional[Tuple[int, int]] = None,
        allow_degenerate: bool = False,
    ) -> Tuple[PlaneGraph, ContractionStep]:
        """Contract the k-wheel centered at ``v``.

        For k=4 and k=5 a link pair at distance two is identified after the
        deletion; the valid pair with the smaller merged id is used unless
        ``pair`` overrides it. For k=2, ``v`` and a degree-4 neighbor
        (``pair[1]`` when given) are removed and their two common neighbors
        identified. ``allow_degenerate`` accepts a simplified result that is
        no longer a triangulation.

        Raises:
            WrongDegree, NoValidPair, UnknownVertex
        """
        if not graph.has_vertex(v):
            raise UnknownVertex(f"Vertex {v} not in graph of order {graph.order}")
        degree = graph.degree(v)
        k = degree if k is None else k
        expected = 4 if k == 2 else k
        if degree != expected:
            raise WrongDegree(f"Vertex {v} has degree {degree}, expected {expected}")
        if k == 3:
            result, vertex_map = self._remove_and_merge(graph, [v], [])
            return result, self._record(3, graph, [v], [], result, vertex_map)
        if k == 2:
            partners = [pair[1]] if pair else [p for _, p in self.contraction_candidates(graph, v, 2)]
            if not partners:
                raise NoValidPair(f"No degree-4 partner of {v} contracts to a triangulation")
            partner = partners[0]
            result, vertex_map = self._double_contraction(graph, v, partner)
            common = sorted(set(graph.neighbors(v)) & set(graph.neighbors(partner)))
            return result, self._record(2, graph, [v, partner], [common], result, vertex_map)
        if k not in (4, 5):
            raise WrongDegree(f"Plain contraction is defined for k in 2..5, got {k}")
        if pair is not None:
            chosen = (min(pair), max(pair))
        else:
            candidates = self.contraction_candidates(graph, v, k)
            if candidates:
                chosen = candidates[0]
            elif allow_degenerate:
                loose = [p for p in self._link_pairs(graph, v, 2) if not graph.adjacent(*p)]
                if not loose:
                    raise NoValidPair(f"All link pairs of {v} are adjacent")
                chosen = loose[0]
            else:
                raise NoValidPair(f"No link pair of {v} contracts to a triangulation")
        result, vertex_map = self._remove_and_merge(graph, [v], [chosen])
        if not allow_degenerate and not result.is_triangulation():
            raise NoValidPair(f"Pair {chosen} at {v} does not give a triangulation")
        return result, self._record(k, graph, [v], [list(chosen)], result, vertex_map)

    # Colored contraction

    def colored_contract(
        self, graph: PlaneGraph, coloring: Coloring, v: int
    ) -> Tuple[PlaneGraph, Coloring, ContractionStep, Optional[str]]:
        """Delete ``v`` and merge same-colored link vertices until maximal planar.

        Merges are tried in canonical pair order with backtracking.

        Raises:
            NotProper, CannotReachMaximal, WrongDegree
        """
        if not coloring.is_proper(graph.to_networkx()):
            raise NotProper("Coloring is not proper on the graph")
        if not graph.has_vertex(v):
            raise UnknownVertex(f"Vertex {v} not in graph of order {graph.order}")
        if graph.degree(v) < 3:
            raise WrongDegree(f"Vertex {v} has degree {graph.degree(v)}")
        ring = graph.link(v)
        groups = self._search_merges(graph, coloring, v, ring, [])
        if groups is None:
            raise CannotReachMaximal(f"No merge order at {v} reaches a triangulation")
        result, vertex_map = self._remove_and_merge(graph, [v], groups)
        induced = {}
        for old, new in vertex_map.items():
            induced[new] = coloring[old]
        after = Coloring(induced, coloring.k)
        if not after.is_proper(result.to_networkx()):
            raise NotProper("Induced coloring is not proper")
        six_type = self.six_wheel_type(groups) if len(ring) == 6 else None
        step = self._record(
            len(ring), graph, [v], groups, result, vertex_map,
            coloring_before=coloring.copy(), coloring_after=after, six_wheel_type=six_type,
        )
        return result, after, step, six_type

    def _search_merges(
        self,
        graph: PlaneGraph,
        coloring: Coloring,
        v: int,
        ring: Sequence[int],
        groups: List[List[int]],
    ) -> Optional[List[List[int]]]:
        try:
            result, vertex_map = self._remove_and_merge(graph, [v], groups)
        except (AdjacentPair, NoCommonFace):
            return None
        if result.is_triangulation():
            return groups
        tried = set()
        for p, q in combinations(sorted(ring), 2):
            if coloring[p] != coloring[q]:
                continue
            a, b = vertex_map[p], vertex_map[q]
            if a == b or result.adjacent(a, b) or (min(a, b), max(a, b)) in tried:
                continue
            tried.add((min(a, b), max(a, b)))
            if not any(b in face for face in result.faces_containing(a)):
                continue
            merged = self._merge_groups(groups, p, q)
            found = self._search_merges(graph, coloring, v, ring, merged)
            if found is not None:
                return found
        return None

    @staticmethod
    def _merge_groups(groups: List[List[int]], p: int, q: int) -> List[List[int]]:
        merged = [list(g) for g in groups]
        gp = next((g for g in merged if p in g), None)
        gq = next((g for g in merged if q in g), None)
        if gp is None and gq is None:
            merged.append(sorted([p, q]))
        elif gp is None:
            gq.append(p)
            gq.sort()
        elif gq is None:
            gp.append(q)
            gp.sort()
        elif gp is not gq:
            merged.remove(gq)
            gp.extend(gq)
            gp.sort()
        return sorted(merged)

    @staticmethod
    def six_wheel_type(groups: Sequence[Sequence[int]]) -> Optional[str]:
        sizes = sorted(len(g) for g in groups)
        if 3 in sizes:
            return "star"
        if sizes == [2, 2]:
            return "line"
        if sizes == [2]:
            return "triangles"
        return None

    # Recover-extension

    def recover_extend(
        self, graph: PlaneGraph, step: ContractionStep
    ) -> Tuple[PlaneGraph, Optional[Coloring]]:
        """Undo ``step`` on the graph it produced.

        Raises:
            TraceMismatch: If ``graph`` is not the recorded contraction result
        """
        data = step.site_data
        if graph_digest(graph) != data.get("post_digest"):
            raise TraceMismatch("Graph does not match the recorded contraction result")
        pre_order = int(data["pre_order"])
        local = {int(w): list(row) for w, row in data["local_rotations"].items()}
        vertex_map = {int(old): new for old, new in data["vertex_map"].items()}
        merged = {w for group in step.merged_pairs for w in group}
        inverse = {new: old for old, new in vertex_map.items() if old not in merged}
        rows = {}
        for old in range(pre_order):
            if old in local:
                rows[old] = local[old]
            else:
                rows[old] = [inverse[w] for w in graph.neighbors(vertex_map[old])]
        restored = _finish(rows)
        certificate = self.triangulations.canonical_certificate(restored).hex()
        if certificate != data.get("pre_certificate"):
            raise TraceMismatch("Restored graph does not match the recorded certificate")
        before = step.coloring_before.copy() if step.coloring_before else None
        return restored, before

    # K3 reduction

    def reduce_to_k3(self, graph: PlaneGraph) -> ContractionTrace:
        """Contract lowest-degree vertices first until K3 remains.

        Does not fail on a triangulation. A stall raises ReductionStalled,
        an AssertionError for a broken invariant.
        """
        trace = ContractionTrace(
            initial_certificate=self.triangulations.canonical_certificate(graph).hex()
        )
        current = graph
        while current.order > 3:
            step_result = self._next_reduction(current)
            if step_result is None:
                raise ReductionStalled(
                    f"No contraction applies to {current} after {len(trace)} steps"
                )
            current, step = step_result
            trace.steps.append(step)
        trace.final_certificate = self.triangulations.canonical_certificate(current).hex()
        return trace

    def _next_reduction(self, graph: PlaneGraph) -> Optional[Tuple[PlaneGraph, ContractionStep]]:
        for v in sorted(range(graph.order), key=lambda w: (graph.degree(w), w)):
            degree = graph.degree(v)
            if degree == 3:
                return self.contract_wheel(graph, v, 3)
            if degree in (4, 5) and self.contraction_candidates(graph, v, degree):
                return self.contract_wheel(graph, v, degree)
            if degree == 4 and self.contraction_candidates(graph, v, 2):
                return self.contract_wheel(graph, v, 2)
        return None

    def replay_trace(self, graph: PlaneGraph, trace: ContractionTrace) -> PlaneGraph:
        """Apply every step forward, checking each recorded result."""
        current = graph
        for step in trace.steps:
            if step.kind in (2, 4, 5) and step.coloring_before is None:
                pair = None
                if step.kind == 2:
                    pair = (step.center, step.site_data["centers"][1])
                elif step.merged_pairs:
                    pair = tuple(step.merged_pairs[0])
                current, _ = self.contract_wheel(current, step.center, step.kind, pair=pair)
            elif step.coloring_before is not None:
                current, _, _, _ = self.colored_contract(current, step.coloring_before, step.center)
            else:
                current, _ = self.contract_wheel(current, step.center, step.kind)
            if graph_digest(current) != step.site_data.get("post_digest"):
                raise TraceMismatch(f"Replay diverged at a kind-{step.kind} step")
        return current

    def unwind_trace(self, graph: PlaneGraph, trace: ContractionTrace) -> PlaneGraph:
        """Apply recover-extension to every step in reverse order."""
        current = graph
        for step in reversed(trace.steps):
            current, _ = self.recover_extend(current, step)
        return current
