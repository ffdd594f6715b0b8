"""Storage infrastructure package."""

from .file_storage import FileStorage
from . import graph_codecs

__all__ = ["FileStorage", "graph_codecs"]
