"""Plane graph model: a simple graph with a rotation system."""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

import networkx as nx


Face = Tuple[int, ...]


@dataclass(frozen=True)
class PlaneGraph:
    """Embedded simple graph on vertices 0..n-1.

    ``rotations[v]`` lists the neighbors of ``v`` in cyclic order. Faces are
    traced by following dart ``(u, v)`` with ``(v, next_around(v, u))``, so
    for every traced face ``(f0, f1, ..., fk)`` the vertex ``f(i+1)`` comes
    right after ``f(i-1)`` in the rotation of ``fi``.
    """

    rotations: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_lists(cls, rotations: Sequence[Sequence[int]]) -> "PlaneGraph":
        return cls(tuple(tuple(int(w) for w in row) for row in rotations))

    # Basic queries

    @property
    def order(self) -> int:
        return len(self.rotations)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rotations) // 2

    @cached_property
    def _positions(self) -> Tuple[Dict[int, int], ...]:
        return tuple({w: i for i, w in enumerate(row)} for row in self.rotations)

    def has_vertex(self, v: int) -> bool:
        return 0 <= v < self.order

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.rotations[v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._positions[u]

    def index_of(self, v: int, w: int) -> int:
        """Position of neighbor ``w`` in the rotation of ``v``."""
        return self._positions[v][w]

    def next_around(self, v: int, w: int) -> int:
        """Neighbor of ``v`` that follows ``w`` in the rotation of ``v``."""
        row = self.rotations[v]
        return row[(self._positions[v][w] + 1) % len(row)]

    def prev_around(self, v: int, w: int) -> int:
        """Neighbor of ``v`` that precedes ``w`` in the rotation of ``v``."""
        row = self.rotations[v]
        return row[(self._positions[v][w] - 1) % len(row)]

    def rotation_from(self, v: int, w: int) -> Tuple[int, ...]:
        """Rotation of ``v`` starting at neighbor ``w``."""
        row = self.rotations[v]
        i = self._positions[v][w]
        return row[i:] + row[:i]

    @cached_property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(
            sorted((u, w) for u, row in enumerate(self.rotations) for w in row if u < w)
        )

    def adjacency(self) -> Dict[int, Set[int]]:
        return {v: set(row) for v, row in enumerate(self.rotations)}

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(row) for row in self.rotations)

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.rotations else 0

    @property
    def degree_sequence(self) -> Tuple[int, ...]:
        """Vertex degrees in ascending order."""
        return tuple(sorted(self.degrees))

    @property
    def degree_string(self) -> str:
        return "".join(str(d) for d in self.degree_sequence)

    # Faces

    @cached_property
    def faces(self) -> Tuple[Face, ...]:
        seen: Set[Tuple[int, int]] = set()
        faces: List[Face] = []
        for u, row in enumerate(self.rotations):
            for w in row:
                if (u, w) in seen:
                    continue
                face = []
                a, b = u, w
                while (a, b) not in seen:
                    seen.add((a, b))
                    face.append(a)
                    a, b = b, self.next_around(b, a)
                faces.append(tuple(face))
        return tuple(faces)

    @cached_property
    def face_sets(self) -> FrozenSet[FrozenSet[int]]:
        return frozenset(frozenset(face) for face in self.faces)

    def face_right_of(self, u: int, w: int) -> Face:
        """The traced face that contains dart ``u -> w``."""
        face = []
        a, b = u, w
        while True:
            face.append(a)
            a, b = b, self.next_around(b, a)
            if a == u and b == w:
                return tuple(face)

    def faces_containing(self, v: int) -> List[Face]:
        """Faces around ``v``, each rotated so that it starts at ``v``."""
        result = []
        for w in self.rotations[v]:
            result.append(self.face_right_of(v, w))
        return result

    def link(self, v: int) -> Tuple[int, ...]:
        return self.rotations[v]

    # Global properties

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in self.rotations[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.order

    def is_simple(self) -> bool:
        return all(
            len(set(row)) == len(row) and v not in row
            for v, row in enumerate(self.rotations)
        )

    def is_triangulation(self) -> bool:
        n = self.order
        if n < 3 or not self.is_simple() or not self.is_connected():
            return False
        if self.size != 3 * n - 6:
            return False
        return all(len(face) == 3 for face in self.faces)

    def validate(self) -> List[str]:
        """Return the list of structural problems (empty when consistent)."""
        errors = []
        for v, row in enumerate(self.rotations):
            for w in row:
                if not 0 <= w < self.order:
                    errors.append(f"Vertex {v} lists unknown neighbor {w}")
                elif v not in self._positions[w]:
                    errors.append(f"Vertex {v} lists {w} but not vice versa")
            if len(set(row)) != len(row):
                errors.append(f"Vertex {v} has parallel edges")
            if v in row:
                errors.append(f"Vertex {v} has a loop")
        if errors:
            return errors
        if not self.is_connected():
            errors.append("Graph is disconnected")
        elif self.order - self.size + len(self.faces) != 2:
            errors.append("Rotation system is not planar (Euler relation fails)")
        return errors

    # Conversions

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        graph.add_edges_from(self.edges)
        return graph

    def mirror(self) -> "PlaneGraph":
        return PlaneGraph(tuple(tuple(reversed(row)) for row in self.rotations))

    def relabel(self, new_ids: Sequence[int]) -> "PlaneGraph":
        """Rename vertex ``v`` to ``new_ids[v]``."""
        rows: List[Tuple[int, ...]] = [()] * self.order
        for v, row in enumerate(self.rotations):
            rows[new_ids[v]] = tuple(new_ids[w] for w in row)
        return PlaneGraph(tuple(rows))

    def __str__(self) -> str:
        return f"PlaneGraph(n={self.order}, m={self.size}, degrees={self.degree_string})"
