"""Unit tests for WheelService."""

from unittest.mock import patch

import pytest

from core.models.coloring import ColorPartition
from core.models.errors import (
    BadSite,
    NotProper,
    NoValidPair,
    PlanarGraphError,
    ReductionStalled,
    TraceMismatch,
    UnknownVertex,
    WrongDegree,
)
from core.models.wheel import ContractionStep, ContractionTrace
from core.services.coloring_service import ColoringService
from core.services.corpus_service import CorpusService
from core.services.triangulation_service import TriangulationService
from core.services.wheel_service import WheelService


# Stacked order-6 graph: K4 on 0..3, vertex 4 in face 0 1 2, vertex 5 in face 0 1 4.
# Vertex 0 has degree 5 with link 1 3 2 4 5.
STACKED_ORDER6 = [
    [1, 3, 2, 4, 5],
    [0, 5, 4, 2, 3],
    [0, 3, 1, 4],
    [0, 1, 2],
    [0, 2, 1, 5],
    [0, 4, 1],
]


class TestWheelService:
    """Test cases for WheelService."""

    def setup_method(self):
        self.triangulations = TriangulationService()
        self.service = WheelService(self.triangulations)
        self.colorings = ColoringService()
        self.k3 = self.triangulations.complete_graph_k3()
        self.k4 = self.triangulations.complete_graph_k4()
        self.octahedron = self.triangulations.octahedron()
        self.k3_certificate = self.triangulations.canonical_certificate(self.k3).hex()

    def _opposite_path(self, graph, u):
        link = graph.link(u)
        return (link[0], u, link[2])

    # Extension sites

    def test_k4_has_one_face_orbit(self):
        assert len(self.service.extension_sites(self.k4, 3)) == 1
        assert len(self.service.extension_sites(self.k4, 3, prune=False)) == 4

    def test_octahedron_face_orbits(self):
        assert len(self.service.extension_sites(self.octahedron, 3)) == 1

    def test_unknown_kind(self):
        with pytest.raises(BadSite):
            self.service.extension_sites(self.k4, 6)

    # Extension and contraction

    def test_extend_three_wheel(self):
        grown, step = self.service.extend_wheel(self.k4, self.k4.faces[0], 3)
        assert grown.degree_string == "33444"
        assert step.kind == 3
        assert step.center == 4
        assert step.order_drop == 1

    def test_contract_three_wheel_undoes_extension(self):
        grown, _ = self.service.extend_wheel(self.k4, self.k4.faces[0], 3)
        shrunk, step = self.service.contract_wheel(grown, 4)
        assert self.triangulations.is_isomorphic(shrunk, self.k4)
        assert step.order_drop == 1

    def test_extend_four_wheel(self):
        site = self._opposite_path(self.octahedron, 0)
        grown, step = self.service.extend_wheel(self.octahedron, site, 4)
        assert grown.order == 8
        assert grown.is_triangulation()
        assert grown.degree(7) == 4
        assert step.kind == 4

    def test_contract_four_wheel_with_recorded_pair(self):
        site = self._opposite_path(self.octahedron, 0)
        grown, _ = self.service.extend_wheel(self.octahedron, site, 4)
        shrunk, step = self.service.contract_wheel(grown, 7, 4, pair=(0, 6))
        assert self.triangulations.is_isomorphic(shrunk, self.octahedron)
        assert step.order_drop == 2

    def test_extend_bad_path(self):
        with pytest.raises(BadSite):
            self.service.extend_wheel(self.octahedron, (0, 1, 4), 4)

    def test_contract_wrong_degree(self):
        with pytest.raises(WrongDegree):
            self.service.contract_wheel(self.octahedron, 0, 3)

    def test_contract_unknown_vertex(self):
        with pytest.raises(UnknownVertex):
            self.service.contract_wheel(self.k4, 9)

    def test_octahedron_double_contraction(self):
        shrunk, step = self.service.contract_wheel(self.octahedron, 0, 2)
        assert self.triangulations.is_isomorphic(shrunk, self.k3)
        assert step.order_drop == 3

    def test_octahedron_has_no_plain_four_contraction(self):
        assert self.service.contraction_candidates(self.octahedron, 0, 4) == []

    # Recover-extension

    def test_recover_extend_restores_graph(self):
        site = self._opposite_path(self.octahedron, 0)
        grown, _ = self.service.extend_wheel(self.octahedron, site, 4)
        shrunk, step = self.service.contract_wheel(grown, 7, 4, pair=(0, 6))
        restored, coloring = self.service.recover_extend(shrunk, step)
        assert restored == grown
        assert coloring is None

    def test_recover_extend_rejects_other_graph(self):
        grown, _ = self.service.extend_wheel(self.k4, self.k4.faces[0], 3)
        _, step = self.service.contract_wheel(grown, 4)
        with pytest.raises(TraceMismatch):
            self.service.recover_extend(self.octahedron, step)

    def test_step_serialization(self):
        grown, _ = self.service.extend_wheel(self.k4, self.k4.faces[0], 3)
        _, step = self.service.contract_wheel(grown, 4)
        copy = ContractionStep.from_dict(step.to_dict())
        assert copy.kind == step.kind
        assert copy.site_data == step.site_data

    # Colored contraction

    def test_colored_contract_degree_three(self):
        grown, _ = self.service.extend_wheel(self.k4, self.k4.faces[0], 3)
        coloring = self.colorings.enumerate_partitions(grown, 4).partitions[0].to_coloring(4)
        shrunk, after, step, six_type = self.service.colored_contract(grown, coloring, 4)
        assert self.triangulations.is_isomorphic(shrunk, self.k4)
        assert after.is_proper(shrunk.to_networkx())
        assert step.coloring_before == coloring
        assert six_type is None

    def test_colored_contract_rejects_improper(self):
        coloring = ColorPartition.from_classes([[0, 1], [2], [3]]).to_coloring(4)
        with pytest.raises(NotProper):
            self.service.colored_contract(self.k4, coloring, 0)

    def test_six_wheel_types(self):
        assert WheelService.six_wheel_type([[0, 2], [1, 4]]) == "line"
        assert WheelService.six_wheel_type([[0, 2, 4]]) == "star"
        assert WheelService.six_wheel_type([[0, 3]]) == "triangles"

    # Reduction

    def test_reduce_stacked_graph(self):
        grown, _ = self.service.extend_wheel(self.k4, self.k4.faces[0], 3)
        trace = self.service.reduce_to_k3(grown)
        assert trace.kinds == [3, 3]
        assert trace.final_certificate == self.k3_certificate

    def test_reduce_octahedron(self):
        trace = self.service.reduce_to_k3(self.octahedron)
        assert trace.kinds == [2]
        assert trace.final_certificate == self.k3_certificate

    def test_trace_replay_and_unwind(self):
        grown, _ = self.service.extend_wheel(self.k4, self.k4.faces[0], 3)
        trace = self.service.reduce_to_k3(grown)
        final = self.service.replay_trace(grown, trace)
        assert final.order == 3
        assert self.service.unwind_trace(final, trace) == grown

    def test_trace_serialization(self):
        trace = self.service.reduce_to_k3(self.octahedron)
        copy = ContractionTrace.from_dict(trace.to_dict())
        assert copy.kinds == trace.kinds
        assert copy.final_certificate == trace.final_certificate

    def test_every_graph_to_order_8_reaches_k3(self):
        corpus = CorpusService(self.triangulations, max_order=8)
        for order in range(4, 9):
            for graph in corpus.enumerate_mpg(order).graphs:
                trace = self.service.reduce_to_k3(graph)
                assert trace.final_certificate == self.k3_certificate

    def test_stall_is_an_internal_assertion(self):
        assert issubclass(ReductionStalled, AssertionError)
        assert not issubclass(ReductionStalled, PlanarGraphError)
        with patch.object(WheelService, "_next_reduction", return_value=None):
            with pytest.raises(ReductionStalled):
                self.service.reduce_to_k3(self.octahedron)

    # Colored 5-wheel contraction on a stacked graph

    def test_colored_five_contraction_merges_until_k3(self):
        graph = self.triangulations.build_from_rotation(6, STACKED_ORDER6)
        partitions = self.colorings.enumerate_partitions(graph, 4)
        assert len(partitions) == 1
        coloring = partitions.partitions[0].to_coloring(4)

        result, after, step, six_type = self.service.colored_contract(graph, coloring, 0)
        assert step.merged_pairs == [[2, 5], [3, 4]]
        assert result.order == 3
        assert result.is_triangulation()
        assert len(self.colorings.enumerate_partitions(result, 4)) == 1
        assert six_type is None
        assert after.is_proper(result.to_networkx())

    def test_single_five_wheel_merge_is_not_maximal(self):
        graph = self.triangulations.build_from_rotation(6, STACKED_ORDER6)
        punctured = self.triangulations.delete_vertex(graph, 0)
        merged = self.triangulations.identify_vertices(punctured, 1, 4)
        assert merged.order == 4
        assert merged.size == 5
        assert not merged.is_triangulation()
        assert len(self.colorings.enumerate_partitions(merged, 4)) == 2


class TestWheelRoundTrips:
    """Extension and contraction undo each other up to certificate."""

    def setup_method(self):
        self.triangulations = TriangulationService()
        self.service = WheelService(self.triangulations)
        corpus = CorpusService(self.triangulations, max_order=9)
        self.corpus = {order: list(corpus.enumerate_mpg(order).graphs) for order in range(4, 10)}

    def certificate(self, graph):
        return self.triangulations.canonical_certificate(graph)

    def _contract_extension(self, grown, step, k):
        if k == 3:
            return self.service.contract_wheel(grown, step.center, 3)
        if k == 2:
            partner = step.site_data["centers"][1]
            return self.service.contract_wheel(grown, step.center, 2, pair=(step.center, partner))
        return self.service.contract_wheel(grown, step.center, k, pair=tuple(step.merged_pairs[0]))

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_extend_then_contract(self, k):
        applied = 0
        for order in range(4, 8):
            for graph in self.corpus[order]:
                expected = self.certificate(graph)
                for site in self.service.extension_sites(graph, k):
                    grown, step = self.service.extend_wheel(graph, site, k)
                    shrunk, _ = self._contract_extension(grown, step, k)
                    assert self.certificate(shrunk) == expected, (graph, site)
                    applied += 1
        assert applied > 0

    def _reinsertion_site(self, graph, v, step):
        """Site in the contracted graph where the removed wheel goes back."""
        mapping = {int(old): new for old, new in step.site_data["vertex_map"].items()}
        ring = list(graph.link(v))
        if step.kind == 3:
            return tuple(mapping[w] for w in ring)
        p, q = step.merged_pairs[0]
        i = ring.index(p)
        if ring[(i + 2) % len(ring)] != q:
            i = ring.index(q)
        ring = ring[i:] + ring[:i]
        if step.kind == 4:
            return (mapping[ring[1]], mapping[ring[0]], mapping[ring[3]])
        return (mapping[ring[1]], mapping[ring[0]], mapping[ring[3]], mapping[ring[4]])

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_contract_then_extend(self, k):
        applied = 0
        for order in range(5, 10):
            for graph in self.corpus[order]:
                expected = self.certificate(graph)
                for v in range(graph.order):
                    if graph.degree(v) != k:
                        continue
                    try:
                        shrunk, step = self.service.contract_wheel(graph, v, k)
                    except NoValidPair:
                        continue
                    site = self._reinsertion_site(graph, v, step)
                    regrown, _ = self.service.extend_wheel(shrunk, site, k)
                    assert self.certificate(regrown) == expected, (graph, v)
                    applied += 1
        assert applied > 0

    def test_double_contraction_recovers(self):
        applied = 0
        for order in range(6, 10):
            for graph in self.corpus[order]:
                expected = self.certificate(graph).hex()
                for v in range(graph.order):
                    if graph.degree(v) != 4:
                        continue
                    try:
                        shrunk, step = self.service.contract_wheel(graph, v, 2)
                    except NoValidPair:
                        continue
                    assert shrunk.order == order - 3
                    restored, _ = self.service.recover_extend(shrunk, step)
                    assert self.certificate(restored).hex() == expected
                    applied += 1
        assert applied > 0


if __name__ == "__main__":
    pytest.main([__file__])
