"""Unit tests for the PlaneGraph model."""

import pytest

from core.models.plane_graph import PlaneGraph
from core.services.triangulation_service import TriangulationService


class TestPlaneGraph:
    """Test cases for PlaneGraph."""

    def setup_method(self):
        self.triangulations = TriangulationService()
        self.k3 = self.triangulations.complete_graph_k3()
        self.k4 = self.triangulations.complete_graph_k4()
        self.octahedron = self.triangulations.octahedron()

    def test_k3_has_two_faces(self):
        assert self.k3.order == 3
        assert self.k3.size == 3
        assert len(self.k3.faces) == 2
        assert self.k3.is_triangulation()

    def test_k4_counts(self):
        assert self.k4.order == 4
        assert self.k4.size == 6
        assert len(self.k4.faces) == 4
        assert self.k4.degree_string == "3333"

    def test_octahedron_faces_are_triangles(self):
        assert self.octahedron.size == 12
        assert len(self.octahedron.faces) == 8
        assert all(len(face) == 3 for face in self.octahedron.faces)
        assert self.octahedron.degree_string == "444444"
        assert self.octahedron.min_degree == 4

    def test_every_dart_is_on_one_face(self):
        darts = [(face[i], face[(i + 1) % 3]) for face in self.octahedron.faces for i in range(3)]
        assert len(darts) == len(set(darts)) == 2 * self.octahedron.size

    def test_next_and_prev_around_are_inverse(self):
        for v in range(self.octahedron.order):
            for w in self.octahedron.neighbors(v):
                following = self.octahedron.next_around(v, w)
                assert self.octahedron.prev_around(v, following) == w

    def test_rotation_from_starts_at_neighbor(self):
        w = self.k4.neighbors(0)[1]
        rotation = self.k4.rotation_from(0, w)
        assert rotation[0] == w
        assert sorted(rotation) == sorted(self.k4.neighbors(0))

    def test_faces_containing_start_at_vertex(self):
        faces = self.octahedron.faces_containing(0)
        assert len(faces) == 4
        assert all(face[0] == 0 for face in faces)

    def test_validate_reports_one_sided_neighbor(self):
        broken = PlaneGraph.from_lists([[1, 2], [2], [0, 1]])
        problems = broken.validate()
        assert any("not vice versa" in p for p in problems)

    def test_validate_accepts_triangulation(self):
        assert self.octahedron.validate() == []

    def test_relabel_preserves_structure(self):
        permutation = [5, 4, 3, 2, 1, 0]
        relabeled = self.octahedron.relabel(permutation)
        assert relabeled.is_triangulation()
        assert relabeled.degree_string == self.octahedron.degree_string
        for u, w in self.octahedron.edges:
            assert relabeled.adjacent(permutation[u], permutation[w])

    def test_mirror_reverses_rotations(self):
        mirrored = self.k4.mirror()
        for v in range(4):
            assert mirrored.neighbors(v) == tuple(reversed(self.k4.neighbors(v)))
        assert mirrored.is_triangulation()

    def test_to_networkx(self):
        graph = self.octahedron.to_networkx()
        assert graph.number_of_nodes() == 6
        assert graph.number_of_edges() == 12

    def test_not_a_triangulation_with_square_face(self):
        square = PlaneGraph.from_lists([[1, 3], [2, 0], [3, 1], [0, 2]])
        assert square.validate() == []
        assert not square.is_triangulation()


if __name__ == "__main__":
    pytest.main([__file__])
