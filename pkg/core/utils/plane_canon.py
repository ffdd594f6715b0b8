"""Canonical codes for connected plane graphs.

A code is produced by a breadth-first walk that starts on a dart and visits
the neighbors of every vertex in rotation order (or reverse rotation order).
Each vertex contributes the labels of its neighbors followed by a 0
separator. The lexicographically smallest code over all starts and both
orientations is a complete invariant of the embedded graph up to relabeling
and reflection.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from core.models.plane_graph import PlaneGraph


Start = Tuple[int, int, bool]


@dataclass
class CanonicalLabeling:
    """Result of a canonical code search."""

    code: Tuple[int, ...]
    order: int
    minimal_starts: List[Start] = field(default_factory=list)
    vertex_orders: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def certificate(self) -> bytes:
        values = (self.order,) + self.code
        return b"".join(value.to_bytes(2, "big") for value in values)

    @property
    def canonical_ids(self) -> List[int]:
        """``canonical_ids[v]`` is the canonical id of vertex ``v``."""
        ids = [0] * self.order
        for new_id, v in enumerate(self.vertex_orders[0]):
            ids[v] = new_id
        return ids

    def automorphisms(self) -> List[Tuple[int, ...]]:
        """Vertex permutations ``p`` with ``p[v]`` the image of ``v``."""
        base = self.vertex_orders[0]
        perms = []
        for other in self.vertex_orders:
            perm = [0] * self.order
            for a, b in zip(base, other):
                perm[a] = b
            perms.append(tuple(perm))
        return sorted(set(perms))


def _walk(
    graph: PlaneGraph, start: Start, best: Optional[List[int]]
) -> Optional[Tuple[List[int], List[int]]]:
    """Code from one start, or None as soon as it exceeds ``best``."""
    root, first, reverse = start
    rotations = graph.rotations
    label = [0] * graph.order
    label[root] = 1
    entry = {root: first}
    order = [root]
    code: List[int] = []
    next_label = 2
    smaller = best is None
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        row = rotations[x]
        degree = len(row)
        i = graph.index_of(x, entry[x])
        step = -1 if reverse else 1
        for offset in range(degree + 1):
            if offset == degree:
                value = 0
            else:
                y = row[(i + step * offset) % degree]
                if label[y] == 0:
                    label[y] = next_label
                    next_label += 1
                    entry[y] = x
                    order.append(y)
                value = label[y]
            if not smaller:
                other = best[len(code)]
                if value > other:
                    return None
                if value < other:
                    smaller = True
            code.append(value)
    return code, order


def canonical_labeling(graph: PlaneGraph) -> CanonicalLabeling:
    """Search all starts at minimum-degree vertices in both orientations."""
    if graph.order == 0:
        return CanonicalLabeling(code=(), order=0, vertex_orders=[()])
    if graph.size == 0:
        return CanonicalLabeling(code=(0,), order=1, minimal_starts=[], vertex_orders=[(0,)])
    low = graph.min_degree
    best: Optional[List[int]] = None
    minimal: List[Start] = []
    orders: List[Tuple[int, ...]] = []
    for root in range(graph.order):
        if graph.degree(root) != low:
            continue
        for first in graph.neighbors(root):
            for reverse in (False, True):
                start = (root, first, reverse)
                walked = _walk(graph, start, best)
                if walked is None:
                    continue
                code, order = walked
                if best is None or code < best:
                    best = code
                    minimal = [start]
                    orders = [tuple(order)]
                elif code == best:
                    minimal.append(start)
                    orders.append(tuple(order))
    return CanonicalLabeling(
        code=tuple(best or ()),
        order=graph.order,
        minimal_starts=minimal,
        vertex_orders=orders,
    )
