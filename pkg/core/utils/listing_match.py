"""Matching printed partition listings against computed partition sets.

A listing uses its own vertex labels, so it is compared through typed
incidence graphs: one node per vertex, per color class and per partition,
with class nodes attached to their members and to their partition.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import jsonschema
import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher, categorical_node_match

from core.models.coloring import ColorPartition, PartitionSet
from core.models.errors import BadFormat


LISTING_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["order", "degree_sequence", "stated_count", "partitions"],
    "properties": {
        "order": {"type": "integer", "minimum": 4},
        "degree_sequence": {"type": "string", "pattern": "^[0-9]+$"},
        "stated_count": {"type": "integer", "minimum": 0},
        "partitions": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "integer", "minimum": 1}},
            },
        },
    },
}

_same_kind = categorical_node_match("kind", None)


def validate_listing(key: str, listing: Dict[str, Any]) -> None:
    """Raises BadFormat when a golden listing does not fit the schema."""
    try:
        jsonschema.validate(instance=listing, schema=LISTING_SCHEMA)
    except jsonschema.ValidationError as e:
        raise BadFormat(f"Listing {key}: {e.message}") from e


@dataclass
class ListingInspection:
    """Internal consistency of one printed listing."""

    order: int
    printed_sequence: str
    stated_count: int
    line_count: int
    distinct: List[ColorPartition] = field(default_factory=list)
    invalid_lines: List[int] = field(default_factory=list)
    duplicate_lines: List[int] = field(default_factory=list)
    sequence_problems: List[str] = field(default_factory=list)

    @property
    def conflicts(self) -> List[str]:
        problems = list(self.sequence_problems)
        if self.invalid_lines:
            problems.append(f"lines {self.invalid_lines} are not partitions of 1..{self.order}")
        if self.duplicate_lines:
            problems.append(f"lines {self.duplicate_lines} repeat earlier lines")
        if self.line_count and self.stated_count != self.line_count:
            problems.append(f"stated count {self.stated_count} but {self.line_count} lines printed")
        return problems

    @property
    def sequence_usable(self) -> bool:
        return not self.sequence_problems


def inspect_listing(listing: Dict[str, Any]) -> ListingInspection:
    """Classify the printed lines of a listing (1-based, line numbers from 1)."""
    order = int(listing["order"])
    printed = str(listing["degree_sequence"])
    lines = listing.get("partitions") or []
    inspection = ListingInspection(order, printed, int(listing["stated_count"]), len(lines))

    if len(printed) != order:
        inspection.sequence_problems.append(
            f"degree sequence {printed} has {len(printed)} entries for order {order}"
        )
    elif sum(int(d) for d in printed) != 6 * order - 12:
        inspection.sequence_problems.append(
            f"degree sequence {printed} sums to {sum(int(d) for d in printed)}, not {6 * order - 12}"
        )

    labels = set(range(1, order + 1))
    seen = set()
    for number, classes in enumerate(lines, start=1):
        members = [v for c in classes for v in c]
        if len(members) != len(set(members)) or set(members) != labels:
            inspection.invalid_lines.append(number)
            continue
        partition = ColorPartition.from_classes(classes)
        if partition in seen:
            inspection.duplicate_lines.append(number)
            continue
        seen.add(partition)
        inspection.distinct.append(partition)
    return inspection


def partition_incidence(partitions: Iterable[ColorPartition], vertices: Iterable[int]) -> nx.Graph:
    """Typed incidence graph of a family of partitions over ``vertices``."""
    graph = nx.Graph()
    for v in vertices:
        graph.add_node(("v", v), kind="vertex")
    for i, partition in enumerate(partitions):
        graph.add_node(("p", i), kind="partition")
        for j, color_class in enumerate(partition.classes):
            node = ("c", i, j)
            graph.add_node(node, kind="class")
            graph.add_edge(node, ("p", i))
            for v in color_class:
                graph.add_edge(node, ("v", v))
    return graph


def vertex_correspondence(mapping: Dict[Any, Any]) -> Dict[int, int]:
    """Computed vertex id -> printed label, from a computed-to-printed matcher map."""
    return {a[1]: b[1] for a, b in mapping.items() if a[0] == "v"}


@dataclass
class ListingMatch:
    """How a listing relates to the partition set of one computed graph."""

    computed_count: int
    isomorphic: bool
    embeds: bool
    labels: Optional[Dict[int, int]] = None


def match_listing(
    inspection: ListingInspection, computed: PartitionSet, vertices: Sequence[int]
) -> ListingMatch:
    """Compare the distinct valid lines with a computed partition set.

    ``embeds`` means every distinct valid line is reproduced under one common
    relabeling of the vertices; ``isomorphic`` additionally requires the
    computed set to hold nothing else.
    """
    count = len(computed)
    if not inspection.distinct:
        return ListingMatch(count, False, True)
    printed = partition_incidence(inspection.distinct, range(1, inspection.order + 1))
    ours = partition_incidence(computed.partitions, vertices)
    if len(inspection.distinct) == count:
        matcher = GraphMatcher(ours, printed, node_match=_same_kind)
        if matcher.is_isomorphic():
            return ListingMatch(count, True, True, vertex_correspondence(matcher.mapping))
    matcher = GraphMatcher(ours, printed, node_match=_same_kind)
    if matcher.subgraph_is_isomorphic():
        return ListingMatch(count, False, True, vertex_correspondence(matcher.mapping))
    return ListingMatch(count, False, False)


def best_match(
    inspection: ListingInspection, candidates: Sequence[Tuple[Any, PartitionSet, Sequence[int]]]
) -> Tuple[Optional[Any], Optional[ListingMatch]]:
    """Candidate graph that fits the listing best.

    Preference: an isomorphic partition set, then one reproducing every
    printed line, then one whose count equals the stated count, then the
    first candidate.
    """
    if not candidates:
        return None, None
    matches = [(key, match_listing(inspection, partitions, vertices)) for key, partitions, vertices in candidates]
    for test in (
        lambda m: m.isomorphic,
        lambda m: m.embeds and m.computed_count == inspection.stated_count,
        lambda m: m.embeds,
        lambda m: m.computed_count == inspection.stated_count,
    ):
        for key, match in matches:
            if test(match):
                return key, match
    return matches[0]
