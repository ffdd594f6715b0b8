"""Coloring service: partitions, counts, Kempe chains and color frames."""

import logging
from itertools import combinations, product
from math import factorial
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple, Union

import networkx as nx

from core.models.coloring import (
    ColorFrame,
    ColorPartition,
    Coloring,
    NearUniqueWitness,
    PartitionSet,
    StandardForm,
)
from core.models.errors import (
    AnchorsNotCoordinated,
    BudgetBelowChromatic,
    Disconnected,
    NotFourColorable,
    NotMaximal,
    NotPlanar,
    StartNotBichromatic,
)
from core.models.plane_graph import PlaneGraph
from core.services.triangulation_service import TriangulationService
from core.utils.helpers import as_networkx


GraphLike = Union[PlaneGraph, nx.Graph]


def search_order(graph: nx.Graph) -> List:
    """Maximum-adjacency order: each next vertex has the most placed neighbors."""
    remaining = set(graph.nodes)
    placed: Set = set()
    order = []
    while remaining:
        best = min(
            remaining,
            key=lambda v: (-len(placed.intersection(graph.neighbors(v))), -graph.degree(v), v),
        )
        order.append(best)
        placed.add(best)
        remaining.discard(best)
    return order


class ColoringService:
    """Enumerates proper colorings and color-class partitions."""

    def __init__(self, triangulation_service: Optional[TriangulationService] = None):
        self.logger = logging.getLogger(__name__)
        self.triangulations = triangulation_service or TriangulationService()

    def _handle_error(self, operation: str, error: Exception) -> None:
        """Centralized error handling and logging."""
        self.logger.error(f"Error {operation}: {str(error)}")
        raise error

    # Enumeration

    def enumerate_partitions(self, graph: GraphLike, k: int, limit: Optional[int] = None) -> PartitionSet:
        """All partitions of V into at most ``k`` independent classes.

        Class indices are introduced in order, so each partition is produced
        once.
        """
        g = as_networkx(graph)
        order = search_order(g)
        earlier = {v: [w for w in g.neighbors(v) if order.index(w) < i] for i, v in enumerate(order)}
        classes: List[List] = []
        assigned: Dict = {}
        found: List[ColorPartition] = []

        def search(i: int) -> bool:
            if limit is not None and len(found) >= limit:
                return True
            if i == len(order):
                found.append(ColorPartition.from_classes(classes))
                return False
            v = order[i]
            blocked = {assigned[w] for w in earlier[v]}
            for index in range(min(len(classes) + 1, k)):
                if index in blocked:
                    continue
                if index == len(classes):
                    classes.append([])
                classes[index].append(v)
                assigned[v] = index
                stop = search(i + 1)
                classes[index].pop()
                del assigned[v]
                if not classes[index]:
                    classes.pop()
                if stop:
                    return True
            return False

        if k >= 1 or not order:
            search(0)
        return PartitionSet(found, k)

    def count_proper_colorings(self, graph: GraphLike, k: int) -> int:
        """Exact number of proper colorings with colors 1..k."""
        g = as_networkx(graph)
        order = search_order(g)
        earlier = {v: [w for w in g.neighbors(v) if order.index(w) < i] for i, v in enumerate(order)}
        assigned: Dict = {}

        def count(i: int, used: int) -> int:
            if i == len(order):
                return 1
            v = order[i]
            blocked = {assigned[w] for w in earlier[v]}
            total = 0
            for color in range(used):
                if color in blocked:
                    continue
                assigned[v] = color
                total += count(i + 1, used)
            if used < k:
                assigned[v] = used
                total += (k - used) * count(i + 1, used + 1)
            assigned.pop(v, None)
            return total

        return count(0, 0)

    def is_colorable(self, graph: GraphLike, k: int) -> bool:
        return len(self.enumerate_partitions(graph, k, limit=1)) > 0

    def chromatic_number(self, graph: GraphLike) -> int:
        g = as_networkx(graph)
        if g.number_of_nodes() == 0:
            return 0
        k = 1
        while not self.is_colorable(g, k):
            k += 1
        return k

    def is_uniquely_colorable(self, graph: GraphLike, k: int) -> bool:
        """True iff every k-coloring induces the same partition.

        Raises:
            BudgetBelowChromatic: If the graph has no k-coloring
        """
        partitions = self.enumerate_partitions(graph, k, limit=2)
        if not partitions:
            raise BudgetBelowChromatic(f"Graph is not {k}-colorable")
        return len(partitions) == 1

    # Kempe chains

    def kempe_component(
        self, graph: GraphLike, coloring: Coloring, i: int, j: int, start
    ) -> FrozenSet:
        """Component of ``start`` in the subgraph induced by colors i and j."""
        g = as_networkx(graph)
        if coloring[start] not in (i, j):
            raise StartNotBichromatic(
                f"Vertex {start} has color {coloring[start]}, not in {{{i}, {j}}}"
            )
        induced = g.subgraph(v for v in g.nodes if coloring[v] in (i, j))
        return frozenset(nx.node_connected_component(induced, start))

    def kempe_interchange(
        self, graph: GraphLike, coloring: Coloring, i: int, j: int, start
    ) -> Coloring:
        component = self.kempe_component(graph, coloring, i, j, start)
        swapped = coloring.copy()
        for v in component:
            swapped.assignment[v] = j if coloring[v] == i else i
        return swapped

    # Color frames

    def color_frame(
        self,
        graph: GraphLike,
        anchors: Sequence,
        partitions: Optional[PartitionSet] = None,
    ) -> ColorFrame:
        """Invariant groups, variant set, boundary and edge cut for ``anchors``.

        Raises:
            AnchorsNotCoordinated: If some partition merges two anchors or
                the graph has no partition into ``len(anchors)`` classes
        """
        g = as_networkx(graph)
        k = len(anchors)
        if len(set(anchors)) != k or any(a not in g for a in anchors):
            raise AnchorsNotCoordinated(f"Anchors {tuple(anchors)} are not {k} distinct vertices")
        partitions = partitions if partitions is not None else self.enumerate_partitions(g, k)
        if not partitions:
            raise AnchorsNotCoordinated(f"Graph has no {k}-coloring")
        groups: List[Set] = [set(g.nodes) for _ in anchors]
        for partition in partitions:
            index = partition.class_index()
            if len({index[a] for a in anchors}) != k:
                raise AnchorsNotCoordinated(
                    f"Partition {partition.to_json()} merges anchors {tuple(anchors)}"
                )
            for group, anchor in zip(groups, anchors):
                group &= set(partition.classes[index[anchor]])
        invariant: Set = set().union(*groups)
        variant = frozenset(set(g.nodes) - invariant)
        cut = tuple(sorted(
            (min(a, b), max(a, b)) for a, b in g.edges
            if (a in variant) != (b in variant)
        ))
        boundary = frozenset(v for edge in cut for v in edge if v not in variant)
        return ColorFrame(
            anchors=tuple(anchors),
            invariant_groups=[frozenset(group) for group in groups],
            variant_set=variant,
            boundary=boundary,
            edge_cut=cut,
        )

    def standard_form(self, graph: GraphLike, anchors: Sequence) -> StandardForm:
        """Merge variant vertices that share a class until the variant set is a clique.

        Pairs that never share a class are joined by an edge instead. The
        result is embedded as a triangulation when the merged graph is
        maximal planar.
        """
        g = nx.Graph(as_networkx(graph))
        k = len(anchors)
        merges: List[Tuple] = []
        while True:
            partitions = self.enumerate_partitions(g, k)
            frame = self.color_frame(g, anchors, partitions)
            pair = self._shared_variant_pair(g, frame, partitions)
            if pair is None:
                break
            u, w = pair
            g = nx.contracted_nodes(g, u, w, self_loops=False)
            merges.append((u, w))
            self.logger.debug(f"Standard form: merged {w} into {u}")
        added = []
        for u, w in combinations(sorted(frame.variant_set), 2):
            if not g.has_edge(u, w):
                g.add_edge(u, w)
                added.append((u, w))
        if added:
            frame = self.color_frame(g, anchors)
        vertex_map = {v: i for i, v in enumerate(sorted(g.nodes))}
        try:
            embedded: Optional[PlaneGraph] = self.triangulations.from_networkx(g)
        except (Disconnected, NotMaximal, NotPlanar) as e:
            self.logger.debug(f"Standard form is not a triangulation: {e}")
            embedded = None
        return StandardForm(
            graph=embedded,
            merged=g,
            anchors=tuple(anchors),
            merges=merges,
            added_edges=added,
            frame=frame,
            vertex_map=vertex_map,
        )

    @staticmethod
    def _shared_variant_pair(
        g: nx.Graph, frame: ColorFrame, partitions: PartitionSet
    ) -> Optional[Tuple]:
        for u, w in combinations(sorted(frame.variant_set), 2):
            if g.has_edge(u, w):
                continue
            if any(p.together(u, w) for p in partitions):
                return u, w
        return None

    def uniquely_near_4_witness(self, graph: GraphLike) -> Optional[NearUniqueWitness]:
        """First anchor quadruple with a uniquely 4-colorable invariant subgraph.

        The quadruple must be separated by every 4-partition. Returns None when
        no quadruple qualifies.

        Raises:
            NotFourColorable
        """
        g = as_networkx(graph)
        partitions = self.enumerate_partitions(g, 4)
        if not partitions:
            raise NotFourColorable("Graph has no 4-coloring")
        first = partitions.partitions[0]
        if first.size != 4:
            return None
        for anchors in product(*first.classes):
            try:
                frame = self.color_frame(g, anchors, partitions)
            except AnchorsNotCoordinated:
                continue
            subgraph = g.subgraph(frame.invariant_set).copy()
            if self.is_uniquely_colorable(subgraph, 4):
                return NearUniqueWitness(anchors, frame.invariant_set, subgraph)
        return None

    # Coordinate lemmas

    def adjacent_group_violations(self, graph: GraphLike, frame: ColorFrame) -> List:
        """Variant vertices adjacent to more than k-2 invariant groups."""
        g = as_networkx(graph)
        k = len(frame.anchors)
        violations = []
        for u in sorted(frame.variant_set):
            touched = {frame.group_of(w) for w in g.neighbors(u)} - {None}
            if len(touched) > k - 2:
                violations.append(u)
        return violations

    def added_edge_violations(self, graph: GraphLike, frame: ColorFrame) -> List:
        """Variant vertices whose edge to the first untouched anchor breaks k-colorability."""
        g = as_networkx(graph)
        k = len(frame.anchors)
        violations = []
        for u in sorted(frame.variant_set):
            touched = {frame.group_of(w) for w in g.neighbors(u)} - {None}
            free = [i for i in range(k) if i not in touched]
            if not free:
                violations.append(u)
                continue
            anchor = frame.anchors[free[0]]
            if g.has_edge(u, anchor):
                continue
            extended = nx.Graph(g)
            extended.add_edge(u, anchor)
            if not self.is_colorable(extended, k):
                violations.append(u)
        return violations

    def universal_singleton_check(self, graph: GraphLike, k: int) -> Optional[bool]:
        """Removing a universal singleton class keeps unique colorability with k-1 colors.

        Returns None when the graph is not uniquely k-colorable or has no
        universal singleton class.
        """
        g = as_networkx(graph)
        partitions = self.enumerate_partitions(g, k, limit=2)
        if len(partitions) != 1:
            return None
        n = g.number_of_nodes()
        for color_class in partitions.partitions[0].classes:
            if len(color_class) == 1 and g.degree(color_class[0]) == n - 1:
                rest = g.subgraph(v for v in g.nodes if v != color_class[0]).copy()
                return len(self.enumerate_partitions(rest, k - 1, limit=2)) == 1
        return None

    def coloring_count_identity(self, graph: GraphLike, k: int) -> Dict[str, object]:
        """Colorings counted directly against the partition sum.

        ``restricted_holds`` is None when some partition has fewer than k
        classes; otherwise it compares the count with k! times the number of
        partitions.
        """
        partitions = self.enumerate_partitions(graph, k)
        direct = self.count_proper_colorings(graph, k)
        summed = partitions.coloring_count()
        full = all(p.size == k for p in partitions)
        return {
            "partitions": len(partitions),
            "count": direct,
            "partition_sum": summed,
            "sum_holds": direct == summed,
            "restricted_holds": (direct == factorial(k) * len(partitions)) if full else None,
        }
