"""Wire formats for plane graphs: graph6, DOT and JSON adjacency."""

import json
import logging
from typing import Any, Dict, Iterable, List, Optional, Union

import networkx as nx

from core.models.errors import BadFormat
from core.models.plane_graph import PlaneGraph


logger = logging.getLogger(__name__)


def encode_graph6(graph: PlaneGraph) -> bytes:
    """graph6 bytes without header or trailing newline."""
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).strip()


def decode_graph6(data: Union[str, bytes]) -> nx.Graph:
    """Parse one graph6 line into an abstract graph."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if not data:
        raise BadFormat("Empty graph6 input")
    try:
        graph = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError, IndexError, TypeError) as e:
        raise BadFormat(f"Invalid graph6 data {data[:20]!r}: {e}") from e
    return graph


def read_graph6_lines(text: str) -> List[bytes]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith(">>"):
            lines.append(line.encode("ascii"))
    return lines


def to_dot(graph: PlaneGraph, name: str = "G", labels: Optional[Dict[int, str]] = None) -> str:
    """DOT text with one comment per traced face."""
    lines = [f"graph {name} {{"]
    lines.append(f"  // n={graph.order} m={graph.size} faces={len(graph.faces)}")
    for index, face in enumerate(graph.faces):
        lines.append(f"  // face {index}: {' '.join(str(v) for v in face)}")
    for v in range(graph.order):
        label = labels.get(v) if labels else None
        if label is not None:
            lines.append(f'  {v} [label="{label}"];')
        else:
            lines.append(f"  {v};")
    for u, v in graph.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_adjacency_dict(graph: PlaneGraph) -> Dict[str, Any]:
    return {"n": graph.order, "edges": [list(e) for e in graph.edges]}


def to_adjacency_json(graph: PlaneGraph) -> str:
    return json.dumps(to_adjacency_dict(graph), sort_keys=True)


def edges_from_adjacency(data: Dict[str, Any]) -> Iterable:
    try:
        return int(data["n"]), [tuple(int(x) for x in e) for e in data["edges"]]
    except (KeyError, TypeError, ValueError) as e:
        raise BadFormat(f"Invalid adjacency JSON: {e}") from e
