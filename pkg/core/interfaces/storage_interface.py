"""Storage service interface."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional, Union


class IStorageService(ABC):
    """Interface for corpus checkpoints, golden files and report output."""

    @abstractmethod
    def save_slice(self, order: int, min_degree: int, graph6_lines: List[bytes]) -> Path:
        """Write one corpus slice as a sorted graph6 file.

        Args:
            order: Vertex count of the slice
            min_degree: Minimum degree filter of the slice
            graph6_lines: graph6 encodings, one per graph

        Returns:
            Path of the written checkpoint
        """
        pass

    @abstractmethod
    def load_slice(self, order: int, min_degree: int) -> Optional[List[bytes]]:
        """Read a corpus slice checkpoint.

        Returns:
            graph6 lines, or None when no checkpoint exists
        """
        pass

    @abstractmethod
    def load_golden(self, file_name: str) -> Dict[str, Any]:
        """Load a golden yaml file from the golden directory.

        Raises:
            FileNotFoundError: If the file does not exist
        """
        pass

    @abstractmethod
    async def save_report(self, content: str, file_name: str) -> Path:
        """Save rendered report text under the reports directory.

        Returns:
            Path of the written report
        """
        pass

    @abstractmethod
    def write_export(self, file_path: Union[str, Path], content: Union[str, bytes]) -> Path:
        """Write an exported artifact (DOT, graph6, JSON)."""
        pass
