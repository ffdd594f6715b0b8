"""Graph service interface."""

from abc import ABC, abstractmethod
from typing import Dict, List, Sequence, Tuple, Union

from core.models.plane_graph import PlaneGraph


class IGraphService(ABC):
    """Interface for building, validating and identifying plane triangulations."""

    @abstractmethod
    def build_from_rotation(
        self, n: int, rotations: Sequence[Sequence[int]], require_maximal: bool = True
    ) -> PlaneGraph:
        """Validate a rotation system.

        Raises:
            InconsistentRotation: If neighbor lists disagree
            Disconnected: If the graph is not connected
            NotTriangulation: If maximality is required and fails
        """
        pass

    @abstractmethod
    def build_from_edge_list(self, n: int, edges: Sequence[Tuple[int, int]]) -> PlaneGraph:
        """Embed a maximal planar edge list.

        Raises:
            Disconnected, NotMaximal, NotPlanar
        """
        pass

    @abstractmethod
    def canonical_certificate(self, graph: PlaneGraph) -> bytes:
        """Isomorphism certificate, equal exactly for isomorphic embeddings (reflections collapsed)."""
        pass

    @abstractmethod
    def automorphisms(self, graph: PlaneGraph) -> List[Tuple[int, ...]]:
        """Vertex permutations preserving the embedding up to reflection."""
        pass

    @abstractmethod
    def encode_graph6(self, graph: PlaneGraph) -> bytes:
        pass

    @abstractmethod
    def decode_graph6(self, data: Union[str, bytes]) -> PlaneGraph:
        """Decode and embed a graph6 string.

        Raises:
            BadFormat: If the input is not valid graph6
        """
        pass

    @abstractmethod
    def from_json(self, data: Dict) -> PlaneGraph:
        """Build from JSON adjacency ``{"n": .., "edges": [[u, v], ..]}``."""
        pass
