"""Unit tests for partition listing inspection and matching."""

from pathlib import Path

import pytest
import yaml

from core.models.coloring import ColorPartition, PartitionSet
from core.models.errors import BadFormat
from core.services.coloring_service import ColoringService
from core.services.triangulation_service import TriangulationService
from core.utils.listing_match import best_match, inspect_listing, match_listing, validate_listing


GOLDEN = Path(__file__).resolve().parents[2] / "golden" / "partition_listings.yml"


class TestListingMatch:
    """Test cases for listing inspection and isomorphism matching."""

    def setup_method(self):
        self.octahedron = TriangulationService().octahedron()
        self.partitions = ColoringService().enumerate_partitions(self.octahedron, 4)
        self.vertices = list(range(self.octahedron.order))

    def _listing(self, lines, stated_count=None, sequence="444444"):
        return {
            "order": 6,
            "degree_sequence": sequence,
            "stated_count": len(lines) if stated_count is None else stated_count,
            "partitions": lines,
        }

    def _printed_lines(self, shift: int = 1):
        """Octahedron partitions under the labeling v -> (v + shift) mod 6, 1-based."""
        return [
            [[(v + shift) % 6 + 1 for v in c] for c in p.classes]
            for p in self.partitions
        ]

    def test_relabeled_listing_is_isomorphic(self):
        inspection = inspect_listing(self._listing(self._printed_lines(shift=2)))
        assert inspection.conflicts == []
        match = match_listing(inspection, self.partitions, self.vertices)
        assert match.isomorphic
        assert match.embeds
        assert match.computed_count == 4
        assert sorted(match.labels) == self.vertices
        assert sorted(match.labels.values()) == list(range(1, 7))

    def test_partial_listing_embeds(self):
        inspection = inspect_listing(self._listing(self._printed_lines()[:3]))
        match = match_listing(inspection, self.partitions, self.vertices)
        assert not match.isomorphic
        assert match.embeds

    def test_foreign_line_does_not_embed(self):
        lines = self._printed_lines()[:2] + [[[1, 2, 3], [4], [5], [6]]]
        match = match_listing(inspect_listing(self._listing(lines)), self.partitions, self.vertices)
        assert not match.embeds
        assert match.labels is None

    def test_empty_listing_embeds_trivially(self):
        match = match_listing(inspect_listing(self._listing([], stated_count=4)), self.partitions, self.vertices)
        assert match.embeds
        assert not match.isomorphic

    def test_invalid_and_duplicate_lines(self):
        lines = self._printed_lines()
        lines = [lines[0], lines[1], lines[0], [[1, 2], [2, 3], [4, 5], [6]]]
        inspection = inspect_listing(self._listing(lines))
        assert inspection.duplicate_lines == [3]
        assert inspection.invalid_lines == [4]
        assert len(inspection.distinct) == 2
        assert len(inspection.conflicts) == 2

    def test_stated_count_conflict(self):
        inspection = inspect_listing(self._listing(self._printed_lines(), stated_count=5))
        assert inspection.conflicts == ["stated count 5 but 4 lines printed"]
        assert inspection.sequence_usable

    def test_degree_sequence_problems(self):
        too_long = inspect_listing(self._listing([], stated_count=0, sequence="4444445"))
        assert not too_long.sequence_usable
        wrong_sum = inspect_listing(self._listing([], stated_count=0, sequence="444445"))
        assert "sums to 25" in wrong_sum.sequence_problems[0]

    def test_validate_listing(self):
        validate_listing("ok", self._listing(self._printed_lines()))
        with pytest.raises(BadFormat):
            validate_listing("missing", {"order": 6, "partitions": []})
        with pytest.raises(BadFormat):
            validate_listing("zero-label", self._listing([[[0, 1], [2, 3], [4, 5]]]))

    def test_best_match_prefers_isomorphic_candidate(self):
        inspection = inspect_listing(self._listing(self._printed_lines()))
        decoy = PartitionSet([ColorPartition.from_classes([[0], [1], [2], [3], [4, 5]])], k=4)
        key, match = best_match(
            inspection,
            [("decoy", decoy, self.vertices), ("octahedron", self.partitions, self.vertices)],
        )
        assert key == "octahedron"
        assert match.isomorphic
        assert best_match(inspection, []) == (None, None)


class TestGoldenListings:
    """Transcription problems found in the published listings."""

    def setup_method(self):
        with open(GOLDEN, "r", encoding="utf-8") as f:
            self.listings = yaml.safe_load(f)["listings"]

    def test_all_listings_fit_schema(self):
        for key, listing in self.listings.items():
            validate_listing(key, listing)

    def test_order8_repeated_vertex(self):
        inspection = inspect_listing(self.listings["order8_44445555"])
        assert inspection.invalid_lines == [3]
        assert len(inspection.distinct) == 2

    def test_order8_repeated_lines(self):
        inspection = inspect_listing(self.listings["order8_44444466"])
        assert inspection.duplicate_lines == [9, 10]
        assert inspection.invalid_lines == []
        assert "stated count 12 but 14 lines printed" in inspection.conflicts


if __name__ == "__main__":
    pytest.main([__file__])
