"""Helpers for editing rotation rows."""

from typing import Dict, Iterable, List, Sequence, Tuple, Union

import networkx as nx

from core.models.plane_graph import PlaneGraph


Rows = Dict[int, List[int]]


def rows_of(graph: PlaneGraph) -> Rows:
    """Mutable copy of the rotation system keyed by vertex."""
    return {v: list(row) for v, row in enumerate(graph.rotations)}


def replace_in_row(row: List[int], old: int, new: Sequence[int]) -> List[int]:
    """Replace the single occurrence of ``old`` by the run ``new``."""
    i = row.index(old)
    return row[:i] + list(new) + row[i + 1:]


def insert_after(row: List[int], anchor: int, value: int) -> List[int]:
    i = row.index(anchor)
    return row[: i + 1] + [value] + row[i + 1:]


def rotate_to(sequence: Sequence[int], first: int) -> List[int]:
    i = list(sequence).index(first)
    return list(sequence[i:]) + list(sequence[:i])


def split_rotation(row: Sequence[int], x: int, y: int) -> Tuple[List[int], List[int]]:
    """Arcs of a rotation strictly between x and y, and between y and x."""
    cycle = rotate_to(row, x)
    j = cycle.index(y)
    return cycle[1:j], cycle[j + 1:]


def compact(rows: Rows) -> Tuple[PlaneGraph, Dict[int, int]]:
    """Renumber the surviving vertices densely, keeping their relative order.

    Surgery results use this order, not the canonical one; pass a result
    through ``TriangulationService.canonical_form`` for canonical ids.
    """
    keep = sorted(rows)
    mapping = {old: new for new, old in enumerate(keep)}
    graph = PlaneGraph(tuple(tuple(mapping[w] for w in rows[old]) for old in keep))
    return graph, mapping


def chunked(items: Sequence, size: int) -> Iterable[Sequence]:
    for start in range(0, len(items), max(1, size)):
        yield items[start:start + size]


def as_networkx(graph: Union[PlaneGraph, nx.Graph]) -> nx.Graph:
    """Abstract graph view of a plane graph; networkx graphs pass through."""
    if isinstance(graph, PlaneGraph):
        return graph.to_networkx()
    return graph
