"""Unit tests for CorpusService."""

import asyncio

import pytest

from core.models.errors import CapExceeded
from core.services.corpus_service import CorpusService
from core.services.storage_service import StorageService
from core.services.triangulation_service import TriangulationService


# Triangulations with minimum degree 3, orders 4..9
ALL_COUNTS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50}
# Minimum degree 4, orders 6..9
MIN_DEGREE_4_COUNTS = {6: 1, 7: 1, 8: 2, 9: 5}


class TestCorpusService:
    """Test cases for CorpusService."""

    def setup_method(self):
        self.triangulations = TriangulationService()
        self.service = CorpusService(self.triangulations, max_order=9)

    def test_operator_counts(self):
        for order, expected in ALL_COUNTS.items():
            assert len(self.service.enumerate_mpg(order)) == expected

    def test_min_degree_4_counts(self):
        for order, expected in MIN_DEGREE_4_COUNTS.items():
            assert len(self.service.enumerate_mpg(order, 4)) == expected

    def test_min_degree_4_degree_strings(self):
        assert [g.degree_string for g in self.service.enumerate_mpg(6, 4)] == ["444444"]
        assert [g.degree_string for g in self.service.enumerate_mpg(7, 4)] == ["4444455"]
        assert sorted(g.degree_string for g in self.service.enumerate_mpg(8, 4)) == ["44444466", "44445555"]

    def test_no_min_degree_5_below_12(self):
        assert len(self.service.enumerate_mpg(9, 5)) == 0

    def test_splitting_counts(self):
        for order in range(4, 9):
            assert len(self.service.enumerate_mpg(order, 3, "splitting")) == ALL_COUNTS[order]

    def test_slices_are_isomorph_free_triangulations(self):
        corpus_slice = self.service.enumerate_mpg(8)
        assert len(corpus_slice.certificate_set()) == len(corpus_slice)
        for certificate, graph in corpus_slice.items():
            assert graph.is_triangulation()
            assert self.triangulations.canonical_certificate(graph) == certificate

    def test_slices_are_sorted(self):
        certificates = self.service.enumerate_mpg(8).certificates
        assert certificates == sorted(certificates)

    def test_cross_check_agrees(self):
        outcome = asyncio.run(self.service.cross_check(7, 3))
        assert outcome["agree"]
        assert outcome["operators"] == outcome["splitting"] == 5

    def test_order_cap(self):
        with pytest.raises(CapExceeded):
            self.service.enumerate_mpg(10)

    def test_unknown_min_degree(self):
        with pytest.raises(CapExceeded):
            self.service.enumerate_mpg(8, 6)

    def test_unknown_strategy(self):
        with pytest.raises(CapExceeded):
            self.service.enumerate_mpg(8, 3, "random")

    def test_worker_pool_gives_same_slice(self):
        pooled = CorpusService(self.triangulations, workers=2, max_order=8, chunk_size=2)
        expected = self.service.enumerate_mpg(8).certificate_set()
        assert pooled.enumerate_mpg(8).certificate_set() == expected


class TestCorpusCheckpoints:
    """Checkpoint files written through StorageService."""

    def test_checkpoint_round_trip(self, tmp_path):
        storage = StorageService(base_directory=str(tmp_path))
        first = CorpusService(storage_service=storage, max_order=8)
        built = first.enumerate_mpg(8, 4)

        checkpoint = storage.slice_path(8, 4)
        assert checkpoint.name == "mpg_n08_d4.g6"
        lines = checkpoint.read_bytes().splitlines()
        assert len(lines) == 2
        assert lines == sorted(lines)

        second = CorpusService(storage_service=storage, max_order=8)
        reloaded = second.enumerate_mpg(8, 4)
        assert reloaded.certificate_set() == built.certificate_set()


if __name__ == "__main__":
    pytest.main([__file__])
