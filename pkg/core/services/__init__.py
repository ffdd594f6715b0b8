"""Core services for the planar graph toolkit."""

from .triangulation_service import TriangulationService
from .coloring_service import ColoringService
from .chrompoly_service import ChromaticPolynomialService
from .wheel_service import WheelService
from .fwf_service import FwfService
from .corpus_service import CorpusService
from .verification_service import VerificationService
from .config_service import ConfigService
from .storage_service import StorageService
from .report_service import ReportService

__all__ = [
    'TriangulationService',
    'ColoringService',
    'ChromaticPolynomialService',
    'WheelService',
    'FwfService',
    'CorpusService',
    'VerificationService',
    'ConfigService',
    'StorageService',
    'ReportService',
]
