"""Unit tests for ChromaticPolynomialService."""

import networkx as nx
import pytest
import sympy

from core.models.errors import NoDiagonal, NotEmptyQuad, OrderTooLarge, WrongDegree
from core.models.identities import FiveContractResult
from core.models.polynomial import Polynomial
from core.services.chrompoly_service import ChromaticPolynomialService
from core.services.coloring_service import ColoringService
from core.services.triangulation_service import TriangulationService


# t(t-1)(t-2)(t^3 - 9t^2 + 29t - 32)
OCTAHEDRON_POLYNOMIAL = Polynomial.falling_factorial(3) * Polynomial((-32, 29, -9, 1))


class TestChromaticPolynomialService:
    """Test cases for ChromaticPolynomialService."""

    def setup_method(self):
        self.service = ChromaticPolynomialService(poly_order_cap=15, precision_bits=128)
        self.triangulations = TriangulationService()
        self.colorings = ColoringService()
        self.k4 = self.triangulations.complete_graph_k4()
        self.octahedron = self.triangulations.octahedron()
        self.icosahedron = self.triangulations.icosahedron()

    # Polynomials

    def test_complete_graphs(self):
        assert self.service.chromatic_polynomial(self.k4) == Polynomial.falling_factorial(4)
        assert self.service.chromatic_polynomial(nx.complete_graph(6)) == Polynomial.falling_factorial(6)

    def test_edgeless_graph(self):
        assert self.service.chromatic_polynomial(nx.empty_graph(3)) == Polynomial.term(1, 3)

    def test_tree(self):
        t = Polynomial.variable()
        assert self.service.chromatic_polynomial(nx.path_graph(4)) == t * (t - 1) ** 3

    def test_cycle(self):
        t = Polynomial.variable()
        assert self.service.chromatic_polynomial(nx.cycle_graph(5)) == (t - 1) ** 5 - (t - 1)

    def test_octahedron(self):
        polynomial = self.service.chromatic_polynomial(self.octahedron)
        assert polynomial == OCTAHEDRON_POLYNOMIAL
        assert polynomial.evaluate(4) == 96
        assert polynomial.signs_alternate()

    def test_addition_strategy_agrees(self):
        addition = ChromaticPolynomialService(strategy="addition")
        assert addition.chromatic_polynomial(self.octahedron) == OCTAHEDRON_POLYNOMIAL

    def test_count_at_matches_enumeration(self):
        for graph in (self.k4, self.octahedron):
            expected = self.colorings.count_proper_colorings(graph, 4)
            assert self.service.count_at(graph, 4) == expected

    def test_count_at_missing_graph(self):
        assert self.service.count_at(None, 4) == 0

    def test_order_cap(self):
        capped = ChromaticPolynomialService(poly_order_cap=5)
        with pytest.raises(OrderTooLarge):
            capped.chromatic_polynomial(self.octahedron)

    def test_memo_fills_and_clears(self):
        self.service.chromatic_polynomial(self.octahedron)
        assert self.service.cache_size > 0
        self.service.clear_cache()
        assert self.service.cache_size == 0

    def test_factorization_across_separating_triangle(self):
        stacked = self.triangulations.insert_vertex_in_face(self.octahedron, self.octahedron.faces[0])
        separator = set(self.octahedron.faces[0])
        assert self.service.factorization_check(stacked, separator) is True
        assert self.service.factorization_check(self.octahedron, {0, 5}) is None

    # Contraction identities

    def test_four_contract_on_octahedron(self):
        result = self.service.four_contract_decomposition(self.octahedron, 0)
        assert result.first_count == 48
        assert result.second_count == 48
        assert result.total == 96
        assert result.holds

    def test_four_contract_wrong_degree(self):
        with pytest.raises(WrongDegree):
            self.service.four_contract_decomposition(self.k4, 0)

    def test_five_contract_on_icosahedron_runs(self):
        result = self.service.five_contract_decomposition(self.icosahedron, 0)
        assert len(result.ring) == 5
        assert result.ring[0] == min(self.icosahedron.neighbors(0))
        assert result.total == self.service.count_at(self.icosahedron, 4)
        assert result.brackets_nonnegative
        assert result.third_bracket_alt >= 0

    def test_brackets_nonnegative_checks_both_third_variants(self):
        result = FiveContractResult(
            vertex=0, ring=[1, 2, 3, 4, 5], first_bracket=2, second_bracket=1,
            third_bracket=3, third_bracket_alt=-1, total=6,
        )
        assert result.holds
        assert not result.holds_alt
        assert not result.brackets_nonnegative

    def test_five_contract_wrong_degree(self):
        with pytest.raises(WrongDegree):
            self.service.five_contract_decomposition(self.octahedron, 0)

    def test_empty_quads(self):
        assert self.service.empty_quads(self.k4) == []
        assert len(self.service.empty_quads(self.octahedron)) == 12

    def test_quad_twist_residual_vanishes(self):
        for quad in self.service.empty_quads(self.octahedron)[:3]:
            result = self.service.quad_twist_ops(self.octahedron, quad)
            assert result.residual.is_zero()
            assert result.original == OCTAHEDRON_POLYNOMIAL

    def test_quad_twist_rejects_missing_diagonal(self):
        with pytest.raises(NoDiagonal):
            self.service.quad_twist_ops(self.octahedron, (0, 1, 5, 2))

    def test_quad_twist_rejects_full_quad(self):
        with pytest.raises(NotEmptyQuad):
            self.service.quad_twist_ops(self.k4, (0, 1, 2, 3))

    # Golden-ratio identities

    def test_constants(self):
        c = self.service.constants
        assert abs(c.tau_sqrt5 - (c.tau + 2)) < c.tolerance
        assert abs(c.tau_squared - (c.tau + 1)) < c.tolerance

    def test_k4_at_tau_squared(self):
        value = self.service.chromatic_polynomial(self.k4)(self.service.constants.tau_squared)
        assert abs(value + 1) < self.service.constants.tolerance

    def test_octahedron_at_tau_squared(self):
        value = self.service.chromatic_polynomial(self.octahedron)(self.service.constants.tau_squared)
        assert abs(value - sympy.Float("0.4721359549995794", 30)) < sympy.Float("1e-12")

    def test_identity_checks_hold_on_small_graphs(self):
        for graph in (self.k4, self.octahedron):
            checks = self.service.tutte_identity_checks(graph)
            names = [check.name for check in checks]
            assert names == ["golden-identity", "golden-positivity", "tau-squared-bound", "vertex-elimination"]
            assert all(check.holds for check in checks), [c.to_dict() for c in checks if not c.holds]


if __name__ == "__main__":
    pytest.main([__file__])
