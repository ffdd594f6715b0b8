"""Unit tests for the graph6, DOT and JSON codecs."""

import json

import pytest

from core.models.errors import BadFormat
from core.services.triangulation_service import TriangulationService
from infrastructure.storage import graph_codecs


class TestGraphCodecs:
    """Test cases for graph_codecs."""

    def setup_method(self):
        self.triangulations = TriangulationService()
        self.k4 = self.triangulations.complete_graph_k4()
        self.octahedron = self.triangulations.octahedron()

    def test_encode_k4(self):
        assert graph_codecs.encode_graph6(self.k4) == b"C~"

    def test_decode_accepts_text_and_bytes(self):
        assert graph_codecs.decode_graph6("C~").number_of_edges() == 6
        assert graph_codecs.decode_graph6(b"C~\n").number_of_nodes() == 4

    def test_decode_empty(self):
        with pytest.raises(BadFormat):
            graph_codecs.decode_graph6("   ")

    def test_decode_garbage(self):
        with pytest.raises(BadFormat):
            graph_codecs.decode_graph6("E~~~~~~~~~~~~~~")

    def test_octahedron_graph6_decodes_to_same_graph(self):
        encoded = graph_codecs.encode_graph6(self.octahedron)
        decoded = self.triangulations.decode_graph6(encoded)
        assert self.triangulations.is_isomorphic(decoded, self.octahedron)

    def test_read_graph6_lines_skips_headers_and_blanks(self):
        text = ">>graph6<<\nC~\n\n  C~  \n"
        assert graph_codecs.read_graph6_lines(text) == [b"C~", b"C~"]

    def test_dot_lists_faces_and_edges(self):
        dot = graph_codecs.to_dot(self.octahedron, name="octahedron")
        assert dot.startswith("graph octahedron {")
        assert dot.count("// face ") == 8
        assert dot.count(" -- ") == 12
        assert dot.rstrip().endswith("}")

    def test_dot_labels(self):
        dot = graph_codecs.to_dot(self.k4, labels={0: "y", 1: "g"})
        assert '0 [label="y"];' in dot
        assert "  2;" in dot

    def test_adjacency_json(self):
        data = json.loads(graph_codecs.to_adjacency_json(self.k4))
        assert data["n"] == 4
        assert len(data["edges"]) == 6
        n, edges = graph_codecs.edges_from_adjacency(data)
        assert n == 4
        assert (0, 1) in edges

    def test_adjacency_json_missing_key(self):
        with pytest.raises(BadFormat):
            graph_codecs.edges_from_adjacency({"edges": []})


if __name__ == "__main__":
    pytest.main([__file__])
