"""Canonical keys for small abstract graphs (individualization and refinement)."""

from typing import Dict, Hashable, Iterable, List, Optional, Set, Tuple


CanonicalKey = Tuple[int, Tuple[Tuple[int, int], ...]]


def _refine(cells: List[List[int]], neighbors: List[Set[int]]) -> List[List[int]]:
    """Split cells by neighbor counts until the partition is equitable."""
    n = len(neighbors)
    while True:
        cell_of = [0] * n
        for index, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = index
        refined: List[List[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[Tuple[int, ...], List[int]] = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in neighbors[v]:
                    counts[cell_of[w]] += 1
                groups.setdefault(tuple(counts), []).append(v)
            if len(groups) > 1:
                changed = True
            for signature in sorted(groups):
                refined.append(groups[signature])
        cells = refined
        if not changed:
            return cells


def canonical_key(adjacency: Dict[Hashable, Iterable[Hashable]]) -> CanonicalKey:
    """Return a key that is equal for two graphs iff they are isomorphic."""
    vertices = sorted(adjacency, key=repr)
    n = len(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    neighbors = [set(index[w] for w in adjacency[v]) for v in vertices]
    by_degree: Dict[int, List[int]] = {}
    for v in range(n):
        by_degree.setdefault(len(neighbors[v]), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]
    best: List[Optional[Tuple[Tuple[int, int], ...]]] = [None]

    def twins(a: int, b: int) -> bool:
        return neighbors[a] - {b} == neighbors[b] - {a}

    def search(current: List[List[int]]) -> None:
        current = _refine(current, neighbors)
        target = next((i for i, cell in enumerate(current) if len(cell) > 1), None)
        if target is None:
            position = [0] * n
            for i, cell in enumerate(current):
                position[cell[0]] = i
            code = tuple(
                sorted(
                    (min(position[a], position[b]), max(position[a], position[b]))
                    for a in range(n)
                    for b in neighbors[a]
                    if a < b
                )
            )
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        cell = current[target]
        tried: List[int] = []
        for v in cell:
            if any(twins(v, u) for u in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(current[:target] + [[v], rest] + current[target + 1:])

    if n:
        search(cells)
    return n, best[0] or ()
