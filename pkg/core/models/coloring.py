"""Coloring, partition and color frame models."""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx

from core.models.plane_graph import PlaneGraph


@dataclass(frozen=True)
class ColorPartition:
    """Partition of the vertex set into independent color classes.

    Classes are sorted tuples, ordered by their least vertex.
    """

    classes: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]]) -> "ColorPartition":
        normalized = [tuple(sorted(c)) for c in classes if c]
        normalized.sort()
        return cls(tuple(normalized))

    @property
    def size(self) -> int:
        return len(self.classes)

    def class_index(self) -> Dict[int, int]:
        return {v: i for i, c in enumerate(self.classes) for v in c}

    def together(self, u: int, v: int) -> bool:
        index = self.class_index()
        return index[u] == index[v]

    def to_coloring(self, k: int) -> "Coloring":
        return Coloring({v: i + 1 for i, c in enumerate(self.classes) for v in c}, k)

    def to_json(self) -> List[List[int]]:
        return [list(c) for c in self.classes]


@dataclass
class PartitionSet:
    """Deduplicated, canonically ordered set of partitions for budget k."""

    partitions: List[ColorPartition] = field(default_factory=list)
    k: int = 4

    def __post_init__(self):
        self.partitions = sorted(set(self.partitions), key=lambda p: p.classes)

    def __len__(self) -> int:
        return len(self.partitions)

    def __iter__(self):
        return iter(self.partitions)

    def __contains__(self, partition: ColorPartition) -> bool:
        return partition in self.partitions

    @property
    def class_counts(self) -> List[int]:
        return [p.size for p in self.partitions]

    def coloring_count(self) -> int:
        """Number of colorings: sum of k!/(k-|P|)! over the partitions."""
        total = 0
        for p in self.partitions:
            ways = 1
            for i in range(p.size):
                ways *= self.k - i
            total += ways
        return total

    def to_json(self) -> List[List[List[int]]]:
        return [p.to_json() for p in self.partitions]


@dataclass
class Coloring:
    """Map from vertex to color in 1..k."""

    assignment: Dict[int, int]
    k: int = 4

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def copy(self) -> "Coloring":
        return Coloring(dict(self.assignment), self.k)

    def is_proper(self, graph: nx.Graph) -> bool:
        if set(self.assignment) != set(graph.nodes):
            return False
        if any(not 1 <= c <= self.k for c in self.assignment.values()):
            return False
        return all(self.assignment[a] != self.assignment[b] for a, b in graph.edges)

    def to_partition(self) -> ColorPartition:
        groups: Dict[int, List[int]] = {}
        for v, c in self.assignment.items():
            groups.setdefault(c, []).append(v)
        return ColorPartition.from_classes(groups.values())

    def chromatic_neighborhood(self, graph: nx.Graph, v: int) -> Dict[int, List[int]]:
        """Neighbors of ``v`` grouped by color."""
        groups: Dict[int, List[int]] = {}
        for w in sorted(graph.neighbors(v)):
            groups.setdefault(self.assignment[w], []).append(w)
        return groups

    def to_dict(self) -> Dict[str, Any]:
        return {"k": self.k, "assignment": {str(v): c for v, c in sorted(self.assignment.items())}}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Coloring":
        return cls({int(v): int(c) for v, c in data["assignment"].items()}, int(data["k"]))


@dataclass
class ColorFrame:
    """Invariant groups of a coordinated graph for a choice of anchors."""

    anchors: Tuple[int, ...]
    invariant_groups: List[FrozenSet[int]]
    variant_set: FrozenSet[int]
    boundary: FrozenSet[int] = frozenset()
    edge_cut: Tuple[Tuple[int, int], ...] = ()

    @property
    def invariant_set(self) -> FrozenSet[int]:
        result: Set[int] = set()
        for group in self.invariant_groups:
            result |= group
        return frozenset(result)

    def group_of(self, v: int) -> Optional[int]:
        for index, group in enumerate(self.invariant_groups):
            if v in group:
                return index
        return None

    def validate(self) -> List[str]:
        errors = []
        for anchor, group in zip(self.anchors, self.invariant_groups):
            if anchor not in group:
                errors.append(f"Anchor {anchor} missing from its invariant group")
        seen: Set[int] = set()
        for group in self.invariant_groups:
            if seen & group:
                errors.append("Invariant groups overlap")
            seen |= group
        if self.boundary - self.invariant_set:
            errors.append("Boundary vertex outside the invariant set")
        return errors


@dataclass
class StandardForm:
    """Result of merging the variant set until it induces a clique.

    ``graph`` is the embedded triangulation, relabeled densely through
    ``vertex_map``; it is None when the merged graph is not maximal planar.
    ``merged`` keeps the original labels, and so do ``merges``,
    ``added_edges`` and ``frame``.
    """

    graph: Optional[PlaneGraph]
    merged: nx.Graph
    anchors: Tuple[int, ...]
    merges: List[Tuple[int, int]] = field(default_factory=list)
    added_edges: List[Tuple[int, int]] = field(default_factory=list)
    frame: Optional[ColorFrame] = None
    vertex_map: Dict[int, int] = field(default_factory=dict)


@dataclass
class NearUniqueWitness:
    """Anchor quadruple whose invariant subgraph is uniquely 4-colorable."""

    anchors: Tuple[int, int, int, int]
    invariant_set: FrozenSet[int]
    subgraph: nx.Graph
