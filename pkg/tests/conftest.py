"""Shared fixtures: reference triangulations and sequence-built FWF graphs."""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from core.services.fwf_service import FwfService
from core.services.triangulation_service import TriangulationService


@pytest.fixture
def triangulations():
    return TriangulationService()


@pytest.fixture
def k3(triangulations):
    return triangulations.complete_graph_k3()


@pytest.fixture
def k4(triangulations):
    return triangulations.complete_graph_k4()


@pytest.fixture
def octahedron(triangulations):
    return triangulations.octahedron()


@pytest.fixture
def icosahedron(triangulations):
    return triangulations.icosahedron()


@pytest.fixture
def fwf9(triangulations):
    """Order-9 (2,2)-FWF graph and its sequence coloring."""
    return FwfService(triangulations).fwf22_from_color_sequence("ygbrybgyg")
