"""Recursive maximal planar graph models: color sequences, catalogs, star extensions."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from core.models.coloring import Coloring
from core.models.plane_graph import PlaneGraph
from core.utils.constants import COLOR_INDEX, COLOR_LETTERS


@dataclass(frozen=True)
class ColorSequence:
    """Colors c1..cn of a (2,2)-FWF graph in insertion order."""

    symbols: str

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def colors(self) -> List[int]:
        return [COLOR_INDEX[s] for s in self.symbols]

    def invalid_symbols(self) -> List[str]:
        return sorted({s for s in self.symbols if s not in COLOR_LETTERS})

    def extended(self, symbol: str) -> "ColorSequence":
        return ColorSequence(self.symbols + symbol)

    def __str__(self) -> str:
        return self.symbols


@dataclass
class FwfCatalog:
    """(2,2)-FWF graphs by order, as certificate hex strings."""

    entries: Dict[int, List[str]] = field(default_factory=dict)
    sequences: Dict[int, Dict[str, str]] = field(default_factory=dict)

    def count(self, n: int) -> int:
        return len(self.entries.get(n, []))

    @staticmethod
    def formula(n: int) -> Optional[int]:
        """Closed-form count 2^(n-7) + 1 for n >= 7; 1 for n in (5, 6)."""
        if n in (5, 6):
            return 1
        if n >= 7:
            return 2 ** (n - 7) + 1
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            str(n): {
                "n": n,
                "count": len(certs),
                "certificates": sorted(certs),
                "sequences": self.sequences.get(n, {}),
            }
            for n, certs in sorted(self.entries.items())
        }


@dataclass
class StarExtension:
    """Extend-4-wheel of a (2,2)-FWF graph on the path x - u - y, with its natural coloring."""

    base: PlaneGraph
    graph: PlaneGraph
    coloring: Coloring
    x: int
    u: int
    y: int
    u_copy: int
    center: int

    @property
    def site(self):
        return (self.x, self.u, self.y)
