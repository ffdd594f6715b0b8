"""Unit tests for FwfService and the FWF models."""

from collections import Counter

import pytest

from core.models.errors import BadPrefix, NoLegalFace, NotTwoTwoFwf
from core.models.fwf import ColorSequence, FwfCatalog
from core.services.coloring_service import ColoringService
from core.services.fwf_service import FwfService
from core.services.triangulation_service import TriangulationService


class TestFwfModels:
    """Test cases for ColorSequence and FwfCatalog."""

    def test_color_sequence(self):
        sequence = ColorSequence("ygbr")
        assert sequence.colors == [1, 2, 3, 4]
        assert ColorSequence("ygxq").invalid_symbols() == ["q", "x"]
        assert str(sequence.extended("y")) == "ygbry"

    def test_formula(self):
        assert FwfCatalog.formula(4) is None
        assert FwfCatalog.formula(5) == 1
        assert FwfCatalog.formula(6) == 1
        assert FwfCatalog.formula(7) == 2
        assert FwfCatalog.formula(8) == 3
        assert FwfCatalog.formula(10) == 9

    def test_catalog_dict(self):
        catalog = FwfCatalog(entries={7: ["bb", "aa"]})
        data = catalog.to_dict()
        assert data["7"]["count"] == 2
        assert data["7"]["certificates"] == ["aa", "bb"]


class TestFwfService:
    """Test cases for FwfService."""

    def setup_method(self):
        self.triangulations = TriangulationService()
        self.colorings = ColoringService()
        self.service = FwfService(self.triangulations, self.colorings)
        self.k4 = self.triangulations.complete_graph_k4()
        self.octahedron = self.triangulations.octahedron()
        self.stacked = self.triangulations.insert_vertex_in_face(self.k4, self.k4.faces[0])

    # Recognition

    def test_k4_is_fwf(self):
        assert self.service.is_fwf(self.k4) == []

    def test_stacked_graph_is_fwf(self):
        peel = self.service.is_fwf(self.stacked)
        assert peel is not None
        assert len(peel) == 1
        assert self.service.is_two_two(self.stacked)

    def test_octahedron_is_not_fwf(self):
        assert self.service.degree3_vertices(self.octahedron) == []
        assert self.service.is_fwf(self.octahedron) is None
        assert self.service.greedy_peel(self.octahedron) == self.octahedron
        assert self.service.peeling_agrees(self.octahedron)
        assert not self.service.is_two_two(self.octahedron)

    def test_greedy_peel_reaches_k4(self):
        assert self.service.greedy_peel(self.stacked).order == 4
        assert self.service.peeling_agrees(self.stacked)

    # Color sequences

    def test_graph_from_sequence(self, fwf9):
        graph, coloring = fwf9
        assert graph.order == 9
        assert graph.is_triangulation()
        assert coloring.is_proper(graph.to_networkx())
        assert self.service.is_two_two(graph)
        assert 3 in self.service.central_vertices(graph)
        assert self.colorings.is_uniquely_colorable(graph, 4)

    def test_sequence_with_wrong_prefix(self):
        with pytest.raises(BadPrefix):
            self.service.fwf22_from_color_sequence("gybryb")

    def test_sequence_too_short(self):
        with pytest.raises(BadPrefix):
            self.service.fwf22_from_color_sequence("ygbr")

    def test_sequence_with_unknown_symbol(self):
        with pytest.raises(BadPrefix):
            self.service.fwf22_from_color_sequence("ygbrybq")

    def test_sequence_without_legal_face(self):
        with pytest.raises(NoLegalFace):
            self.service.fwf22_from_color_sequence("ygbrybr")

    def test_legal_symbols(self):
        assert self.service.legal_symbols("ygbryb") == ["y", "g"]

    def test_color_sequences(self):
        assert self.service.color_sequences(6) == ["ygbryb"]
        assert sorted(self.service.color_sequences(7)) == ["ygbrybg", "ygbryby"]
        assert len(self.service.color_sequences(9)) == 8

    # Catalogs

    def test_enumerate_small_orders(self):
        assert self.service.enumerate_fwf22(5).count(5) == 1
        assert self.service.enumerate_fwf22(6).count(6) == 1
        assert self.service.enumerate_fwf22(7).count(7) == 2

    def test_sequence_catalog_is_within_enumeration(self):
        enumerated = set(self.service.enumerate_fwf22(7).entries[7])
        from_sequences = self.service.catalog_from_sequences(7)
        assert set(from_sequences.entries[7]) <= enumerated
        assert set(from_sequences.sequences[7]) == set(from_sequences.entries[7])

    # Star extensions

    def test_star_extension(self, fwf9):
        graph, coloring = fwf9
        extension = self.service.star_extension_natural_coloring(graph, coloring)
        assert extension.graph.order == 11
        assert extension.graph.is_triangulation()
        assert extension.coloring.is_proper(extension.graph.to_networkx())
        assert extension.site == (extension.x, extension.u, extension.y)

    def test_star_extension_has_second_coloring(self, fwf9):
        graph, coloring = fwf9
        extension = self.service.star_extension_natural_coloring(graph, coloring)
        recipe, alternative = self.service.find_alternative(extension)
        assert recipe in ("free-center", "adjacent-swap", "cascade", "exhaustive")
        assert alternative.is_proper(extension.graph.to_networkx())
        assert alternative.to_partition() != extension.coloring.to_partition()

    def test_alternative_coloring(self, fwf9):
        graph, coloring = fwf9
        extension = self.service.star_extension_natural_coloring(graph, coloring)
        alternative = self.service.alternative_coloring(extension)
        assert alternative.to_partition() != extension.coloring.to_partition()

    @pytest.mark.parametrize("symbols, recipes", [
        ("ygbry", {"free-center"}),
        ("ygbryb", {"adjacent-swap"}),
        ("ygbryby", {"free-center"}),
        ("ygbrybyb", {"adjacent-swap"}),
        ("ygbrybg", {"cascade", "exhaustive"}),
    ])
    def test_alternative_recipe_by_type(self, symbols, recipes):
        graph, coloring = self.service.fwf22_from_color_sequence(symbols)
        extension = self.service.star_extension_natural_coloring(graph, coloring)
        recipe, alternative = self.service.find_alternative(extension)
        assert recipe in recipes
        assert alternative.is_proper(extension.graph.to_networkx())
        assert alternative.to_partition() != extension.coloring.to_partition()

    def test_adjacent_swap_recolors_x_and_y_alike(self):
        graph, coloring = self.service.fwf22_from_color_sequence("ygbrybyb")
        extension = self.service.star_extension_natural_coloring(graph, coloring)
        _, alternative = self.service.find_alternative(extension)
        natural = extension.coloring
        assert alternative[extension.x] == alternative[extension.y] == natural[extension.u]
        assert alternative[extension.center] == natural[extension.y]
        assert {alternative[extension.u], alternative[extension.u_copy]} == {
            natural[extension.center], natural[extension.x],
        }

    def test_alternative_recipes_over_catalog(self):
        recipes = Counter()
        for n in range(5, 10):
            for symbols in self.service.catalog_from_sequences(n).sequences[n].values():
                graph, coloring = self.service.fwf22_from_color_sequence(symbols)
                extension = self.service.star_extension_natural_coloring(graph, coloring)
                recipes[self.service.find_alternative(extension)[0]] += 1
        assert sum(recipes.values()) == 13
        assert recipes["free-center"] == 6
        assert recipes["adjacent-swap"] >= 2

    def test_star_extension_needs_two_two_graph(self):
        with pytest.raises(NotTwoTwoFwf):
            self.service.star_extension_natural_coloring(self.octahedron)


if __name__ == "__main__":
    pytest.main([__file__])
