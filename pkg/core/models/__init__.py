"""Core data models for the planar graph toolkit."""

from .plane_graph import PlaneGraph
from .polynomial import Polynomial
from .coloring import Coloring, ColorPartition, PartitionSet, ColorFrame
from .wheel import ContractionStep, ContractionTrace
from .fwf import ColorSequence, FwfCatalog, StarExtension
from .corpus import Corpus, CorpusSlice
from .config import RunConfig, LimitsConfig, LogLevel
from .workflow import VerificationPhase, PhaseResult, RunResult
from .report import VerificationReport, ReportBundle, ClaimStatus

__all__ = [
    'PlaneGraph',
    'Polynomial',
    'Coloring',
    'ColorPartition',
    'PartitionSet',
    'ColorFrame',
    'ContractionStep',
    'ContractionTrace',
    'ColorSequence',
    'FwfCatalog',
    'StarExtension',
    'Corpus',
    'CorpusSlice',
    'RunConfig',
    'LimitsConfig',
    'LogLevel',
    'VerificationPhase',
    'PhaseResult',
    'RunResult',
    'VerificationReport',
    'ReportBundle',
    'ClaimStatus',
]
