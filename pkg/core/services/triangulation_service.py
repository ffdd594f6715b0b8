"""Triangulation service: construction, validation, surgery and certificates."""

import logging
from typing import Dict, List, Sequence, Tuple, Union

import networkx as nx

from core.models.errors import (
    AdjacentPair,
    Disconnected,
    InconsistentRotation,
    NoCommonFace,
    NonTriangularFace,
    NotMaximal,
    NotPlanar,
    NotTriangulation,
    OrderTooSmall,
    UnknownFace,
    UnknownVertex,
)
from core.interfaces.graph_interface import IGraphService
from core.models.plane_graph import Face, PlaneGraph
from core.utils.helpers import compact, insert_after, rotate_to, rows_of
from core.utils.plane_canon import CanonicalLabeling, canonical_labeling
from infrastructure.storage import graph_codecs


class TriangulationService(IGraphService):
    """Builds plane triangulations and performs local surgery on them."""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def _handle_error(self, operation: str, error: Exception) -> None:
        """Centralized error handling and logging."""
        self.logger.error(f"Error {operation}: {str(error)}")
        raise error

    # Construction

    def build_from_rotation(
        self, n: int, rotations: Sequence[Sequence[int]], require_maximal: bool = True
    ) -> PlaneGraph:
        """Validate a rotation system and return it as a plane graph.

        Raises:
            InconsistentRotation: If neighbor lists disagree
            Disconnected: If the graph is not connected
            NotTriangulation: If maximality is required and fails
        """
        if len(rotations) != n:
            raise InconsistentRotation(f"Expected {n} rotation rows, got {len(rotations)}")
        graph = PlaneGraph.from_lists(rotations)
        problems = [p for p in graph.validate() if "disconnected" not in p]
        if problems:
            raise InconsistentRotation("; ".join(problems))
        if not graph.is_connected():
            raise Disconnected(f"Rotation system on {n} vertices is disconnected")
        if n - graph.size + len(graph.faces) != 2:
            raise InconsistentRotation("Rotation system is not planar (Euler relation fails)")
        if require_maximal and n >= 3 and not graph.is_triangulation():
            raise NotTriangulation(
                f"n={n}, m={graph.size}, face lengths {sorted(len(f) for f in graph.faces)}"
            )
        return graph

    def build_from_edge_list(self, n: int, edges: Sequence[Tuple[int, int]]) -> PlaneGraph:
        """Embed a maximal planar edge list.

        Raises:
            Disconnected, NotMaximal, NotPlanar
        """
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(n))
        nx_graph.add_edges_from(edges)
        return self.from_networkx(nx_graph)

    def from_networkx(self, nx_graph: nx.Graph) -> PlaneGraph:
        n = nx_graph.number_of_nodes()
        mapping = {v: i for i, v in enumerate(sorted(nx_graph.nodes))}
        nx_graph = nx.relabel_nodes(nx_graph, mapping)
        if n and not nx.is_connected(nx_graph):
            raise Disconnected(f"Edge list on {n} vertices is disconnected")
        if n < 3 or nx_graph.number_of_edges() != 3 * n - 6:
            raise NotMaximal(f"n={n}, m={nx_graph.number_of_edges()} (need m = 3n - 6)")
        is_planar, embedding = nx.check_planarity(nx_graph)
        if not is_planar:
            raise NotPlanar(f"Graph with n={n}, m={nx_graph.number_of_edges()} is not planar")
        rotations = [list(embedding.neighbors_cw_order(v)) for v in range(n)]
        graph = PlaneGraph.from_lists(rotations)
        if not graph.is_triangulation():
            raise NotMaximal("Embedding has a non-triangular face")
        return graph

    # Queries

    def _require_vertex(self, graph: PlaneGraph, v: int) -> None:
        if not isinstance(v, int) or not graph.has_vertex(v):
            raise UnknownVertex(f"Vertex {v} not in graph of order {graph.order}")

    def link(self, graph: PlaneGraph, v: int) -> Tuple[int, ...]:
        """Neighbors of ``v`` in rotation order."""
        self._require_vertex(graph, v)
        return graph.link(v)

    def find_face(self, graph: PlaneGraph, vertices: Sequence[int]) -> Face:
        """Traced face with the given vertex set, in traced orientation."""
        wanted = frozenset(vertices)
        for face in graph.faces:
            if frozenset(face) == wanted and len(face) == len(vertices):
                return face
        raise UnknownFace(f"No face with vertices {sorted(wanted)}")

    # Surgery

    def delete_vertex(self, graph: PlaneGraph, v: int) -> PlaneGraph:
        return self.delete_vertex_mapped(graph, v)[0]

    def delete_vertex_mapped(
        self, graph: PlaneGraph, v: int
    ) -> Tuple[PlaneGraph, Dict[int, int]]:
        """Remove ``v``; the faces around it merge into one face.

        Returns:
            The new graph and the map from surviving old ids to new ids.
        """
        self._require_vertex(graph, v)
        if graph.order < 4:
            raise OrderTooSmall(f"Cannot delete a vertex from a graph of order {graph.order}")
        rows = rows_of(graph)
        del rows[v]
        for w in graph.neighbors(v):
            rows[w].remove(v)
        return compact(rows)

    def identify_vertices(self, graph: PlaneGraph, u: int, w: int) -> PlaneGraph:
        return self.identify_vertices_mapped(graph, u, w)[0]

    def identify_vertices_mapped(
        self, graph: PlaneGraph, u: int, w: int
    ) -> Tuple[PlaneGraph, Dict[int, int]]:
        """Merge non-adjacent ``w`` into ``u`` across a shared face.

        Parallel edges from common neighbors are reduced to single edges.

        Returns:
            The new graph and a map from old ids to new ids (``w`` maps to
            the id of the merged vertex).
        """
        self._require_vertex(graph, u)
        self._require_vertex(graph, w)
        if u == w:
            raise AdjacentPair(f"Cannot identify vertex {u} with itself")
        if graph.adjacent(u, w):
            raise AdjacentPair(f"Vertices {u} and {w} are adjacent")
        face = next((f for f in graph.faces_containing(u) if w in f), None)
        if face is None:
            raise NoCommonFace(f"Vertices {u} and {w} share no face")
        j = face.index(w)
        a_first = face[1]
        b_first = face[(j + 1) % len(face)]
        u_side = rotate_to(graph.neighbors(u), a_first)
        w_side = rotate_to(graph.neighbors(w), b_first)
        shared = set(u_side) & set(w_side)
        rows = rows_of(graph)
        rows[u] = u_side + [x for x in w_side if x not in shared]
        for x in w_side:
            if x in shared:
                rows[x].remove(w)
            else:
                rows[x] = [u if y == w else y for y in rows[x]]
        del rows[w]
        new_graph, mapping = compact(rows)
        mapping[w] = mapping[u]
        return new_graph, mapping

    def insert_vertex_in_face(self, graph: PlaneGraph, face: Sequence[int]) -> PlaneGraph:
        """Add a degree-3 vertex (id ``n``) inside a triangular face."""
        if len(face) != 3:
            self.find_face(graph, face)
            raise NonTriangularFace(f"Face {tuple(face)} has length {len(face)}")
        a, b, c = self.find_face(graph, face)
        z = graph.order
        rows = rows_of(graph)
        rows[b] = insert_after(rows[b], a, z)
        rows[c] = insert_after(rows[c], b, z)
        rows[a] = insert_after(rows[a], c, z)
        rows[z] = [a, c, b]
        return PlaneGraph(tuple(tuple(rows[v]) for v in range(z + 1)))

    def split_vertex(self, graph: PlaneGraph, s: int, p: int, q: int) -> PlaneGraph:
        """Split ``s`` along neighbors ``p`` and ``q`` into adjacent vertices.

        The new vertex (id ``n``) takes the arc of the rotation of ``s`` from
        ``q`` to ``p``; both halves stay adjacent to ``p`` and ``q``.
        """
        self._require_vertex(graph, s)
        if p == q or not graph.adjacent(s, p) or not graph.adjacent(s, q):
            raise UnknownVertex(f"({p}, {q}) are not two distinct neighbors of {s}")
        cycle = rotate_to(graph.neighbors(s), p)
        j = cycle.index(q)
        arc_a, arc_b = cycle[1:j], cycle[j + 1:]
        t = graph.order
        rows = rows_of(graph)
        rows[s] = [p] + arc_a + [q, t]
        rows[t] = [q] + arc_b + [p, s]
        rows[p] = [x for y in rows[p] for x in ((s, t) if y == s else (y,))]
        rows[q] = [x for y in rows[q] for x in ((t, s) if y == s else (y,))]
        for x in arc_b:
            rows[x] = [t if y == s else y for y in rows[x]]
        return PlaneGraph(tuple(tuple(rows[v]) for v in range(t + 1)))

    def flip_edge(self, graph: PlaneGraph, x: int, z: int) -> PlaneGraph:
        """Replace edge ``x z`` by the other diagonal of its two faces."""
        self._require_vertex(graph, x)
        self._require_vertex(graph, z)
        if not graph.adjacent(x, z):
            raise AdjacentPair(f"Vertices {x} and {z} are not adjacent")
        a = graph.next_around(z, x)
        b = graph.next_around(x, z)
        if a == b or graph.adjacent(a, b):
            raise AdjacentPair(f"Flipping {x}-{z} would duplicate edge {a}-{b}")
        rows = rows_of(graph)
        rows[x].remove(z)
        rows[z].remove(x)
        rows[a] = insert_after(rows[a], z, b)
        rows[b] = insert_after(rows[b], x, a)
        return PlaneGraph(tuple(tuple(rows[v]) for v in range(graph.order)))

    def contract_edge(self, graph: PlaneGraph, x: int, z: int) -> Tuple[PlaneGraph, Dict[int, int]]:
        """Contract edge ``x z`` into ``x``; parallel edges are reduced."""
        self._require_vertex(graph, x)
        self._require_vertex(graph, z)
        if not graph.adjacent(x, z):
            raise AdjacentPair(f"Vertices {x} and {z} are not adjacent")
        rows = rows_of(graph)
        rows[x].remove(z)
        rows[z].remove(x)
        opened = PlaneGraph(tuple(tuple(rows[v]) for v in range(graph.order)))
        return self.identify_vertices_mapped(opened, x, z)

    # Certificates

    def canonical_labeling(self, graph: PlaneGraph) -> CanonicalLabeling:
        return canonical_labeling(graph)

    def canonical_certificate(self, graph: PlaneGraph) -> bytes:
        return canonical_labeling(graph).certificate

    def automorphisms(self, graph: PlaneGraph) -> List[Tuple[int, ...]]:
        """Vertex permutations preserving the embedding up to reflection."""
        return canonical_labeling(graph).automorphisms()

    def canonical_form(self, graph: PlaneGraph) -> PlaneGraph:
        """The graph relabeled in canonical breadth-first order."""
        return graph.relabel(canonical_labeling(graph).canonical_ids)

    def is_isomorphic(self, first: PlaneGraph, second: PlaneGraph) -> bool:
        return self.canonical_certificate(first) == self.canonical_certificate(second)

    # Codecs

    def encode_graph6(self, graph: PlaneGraph) -> bytes:
        return graph_codecs.encode_graph6(graph)

    def decode_graph6(self, data: Union[str, bytes]) -> PlaneGraph:
        return self.from_networkx(graph_codecs.decode_graph6(data))

    def from_json(self, data: Dict) -> PlaneGraph:
        n, edges = graph_codecs.edges_from_adjacency(data)
        return self.build_from_edge_list(n, edges)

    # Reference graphs

    def complete_graph_k3(self) -> PlaneGraph:
        return PlaneGraph(((1, 2), (2, 0), (0, 1)))

    def complete_graph_k4(self) -> PlaneGraph:
        return self.insert_vertex_in_face(self.complete_graph_k3(), (0, 1, 2))

    def octahedron(self) -> PlaneGraph:
        return self.from_networkx(nx.octahedral_graph())

    def icosahedron(self) -> PlaneGraph:
        return self.from_networkx(nx.icosahedral_graph())
