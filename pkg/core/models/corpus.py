"""Corpus of isomorph-free maximal planar graphs."""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

from core.models.plane_graph import PlaneGraph


@dataclass
class CorpusSlice:
    """All triangulations of one order with minimum degree at least ``min_degree``.

    ``certificates`` and ``graphs`` run in parallel, sorted by certificate.
    """

    order: int
    min_degree: int
    certificates: List[bytes] = field(default_factory=list)
    graphs: List[PlaneGraph] = field(default_factory=list)
    strategy: str = "operators"

    @classmethod
    def from_mapping(
        cls, order: int, min_degree: int, graphs: Dict[bytes, PlaneGraph], strategy: str = "operators"
    ) -> "CorpusSlice":
        keys = sorted(graphs)
        return cls(order, min_degree, keys, [graphs[k] for k in keys], strategy)

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self) -> Iterator[PlaneGraph]:
        return iter(self.graphs)

    def items(self) -> List[Tuple[bytes, PlaneGraph]]:
        return list(zip(self.certificates, self.graphs))

    def certificate_set(self) -> frozenset:
        return frozenset(self.certificates)


@dataclass
class Corpus:
    """Corpus slices keyed by (order, min_degree)."""

    slices: Dict[Tuple[int, int], CorpusSlice] = field(default_factory=dict)

    def add(self, corpus_slice: CorpusSlice) -> None:
        self.slices[(corpus_slice.order, corpus_slice.min_degree)] = corpus_slice

    def get(self, order: int, min_degree: int) -> CorpusSlice:
        return self.slices[(order, min_degree)]

    def __contains__(self, key: Tuple[int, int]) -> bool:
        return key in self.slices

    def counts(self) -> Dict[str, int]:
        return {f"{n}:{d}": len(s) for (n, d), s in sorted(self.slices.items())}
