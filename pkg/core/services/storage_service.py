"""Storage service implementation."""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml

from core.interfaces.storage_interface import IStorageService
from core.models.errors import BadFormat
from infrastructure.storage.file_storage import FileStorage
from infrastructure.storage.graph_codecs import read_graph6_lines


class StorageService(IStorageService):
    """Implementation of storage service."""

    def __init__(
        self,
        base_directory: str = "./output",
        corpus_directory: Optional[str] = None,
        golden_directory: str = "golden",
    ):
        self.base_directory = Path(base_directory).resolve()
        self.logger = logging.getLogger(__name__)
        self.files = FileStorage(str(self.base_directory))

        self.corpus_dir = Path(corpus_directory).resolve() if corpus_directory else self.base_directory / "corpus"
        self.reports_dir = self.base_directory / "reports"
        self.golden_dir = Path(golden_directory)

        for directory in [self.corpus_dir, self.reports_dir]:
            self.files.ensure_directory_exists(str(directory))

    def _handle_error(self, message: str, exception: Exception) -> None:
        """Centralized error handling and logging."""
        self.logger.error(f"{message}: {str(exception)}")
        raise exception

    def slice_path(self, order: int, min_degree: int) -> Path:
        return self.corpus_dir / f"mpg_n{order:02d}_d{min_degree}.g6"

    def save_slice(self, order: int, min_degree: int, graph6_lines: List[bytes]) -> Path:
        path = self.slice_path(order, min_degree)
        content = b"".join(line + b"\n" for line in sorted(graph6_lines))
        self.files.write_binary_file(str(path), content)
        self.logger.info(f"Checkpoint written: {path} ({len(graph6_lines)} graphs)")
        return path

    def load_slice(self, order: int, min_degree: int) -> Optional[List[bytes]]:
        path = self.slice_path(order, min_degree)
        if not path.exists():
            return None
        try:
            text = self.files.read_binary_file(str(path)).decode("ascii")
        except UnicodeDecodeError as e:
            self._handle_error(f"Error reading checkpoint {path}", BadFormat(str(e)))
        lines = read_graph6_lines(text)
        self.logger.info(f"Checkpoint loaded: {path} ({len(lines)} graphs)")
        return lines

    def load_golden(self, file_name: str) -> Dict[str, Any]:
        path = self.golden_dir / file_name
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            self._handle_error(f"Error parsing golden file {path}", BadFormat(str(e)))
        except FileNotFoundError as e:
            self._handle_error(f"Golden file missing {path}", e)
        return data

    async def save_report(self, content: str, file_name: str) -> Path:
        path = self.reports_dir / file_name
        self.files.write_file(str(path), content)
        self.logger.info(f"Report saved: {path}")
        return path

    def write_export(self, file_path: Union[str, Path], content: Union[str, bytes]) -> Path:
        path = Path(file_path)
        if isinstance(content, bytes):
            self.files.write_binary_file(str(path), content)
        else:
            self.files.write_file(str(path), content)
        return path
