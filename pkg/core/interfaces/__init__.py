"""Core interfaces for the planar graph toolkit."""

from .config_interface import IConfigService
from .graph_interface import IGraphService
from .storage_interface import IStorageService

__all__ = [
    'IConfigService',
    'IGraphService',
    'IStorageService',
]
