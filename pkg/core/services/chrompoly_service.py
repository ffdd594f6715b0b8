"""Chromatic polynomials and the golden-ratio identity checks."""

import logging
from itertools import combinations
from typing import Dict, FrozenSet, Hashable, List, Optional, Set, Tuple, Union

import networkx as nx
import sympy

from core.models.errors import NoDiagonal, NotEmptyQuad, OrderTooLarge, WrongDegree
from core.models.identities import (
    FiveContractResult,
    FourContractResult,
    GoldenConstants,
    IdentityCheck,
    QuadTwistResult,
)
from core.models.plane_graph import PlaneGraph
from core.models.polynomial import Polynomial
from core.utils.graph_canon import CanonicalKey, canonical_key
from core.utils.helpers import as_networkx


Adjacency = Dict[Hashable, Set[Hashable]]
GraphLike = Union[PlaneGraph, nx.Graph]

STRATEGIES = ("deletion", "addition")


def _adjacency(graph: nx.Graph) -> Adjacency:
    return {v: set(graph.neighbors(v)) - {v} for v in graph.nodes}


def _edge_count(adj: Adjacency) -> int:
    return sum(len(ws) for ws in adj.values()) // 2


def _induced(adj: Adjacency, keep: Set) -> Adjacency:
    return {v: adj[v] & keep for v in keep}


def _components(adj: Adjacency, removed: FrozenSet = frozenset()) -> List[Set]:
    seen: Set = set(removed)
    parts = []
    for start in sorted(adj, key=repr):
        if start in seen:
            continue
        part = {start}
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    part.add(w)
                    stack.append(w)
        parts.append(part)
    return parts


def _delete_edge(adj: Adjacency, u, w) -> Adjacency:
    result = {v: set(ws) for v, ws in adj.items()}
    result[u].discard(w)
    result[w].discard(u)
    return result


def _add_edge(adj: Adjacency, u, w) -> Adjacency:
    result = {v: set(ws) for v, ws in adj.items()}
    result[u].add(w)
    result[w].add(u)
    return result


def _contract(adj: Adjacency, u, w) -> Adjacency:
    """Merge ``w`` into ``u`` keeping the graph simple."""
    result = {v: set(ws) for v, ws in adj.items() if v != w}
    for x in adj[w]:
        if x == u:
            continue
        result[x].discard(w)
        result[x].add(u)
        result[u].add(x)
    result[u].discard(w)
    return result


class ChromaticPolynomialService:
    """Exact chromatic polynomials with clique-separator factorization."""

    def __init__(self, poly_order_cap: int = 15, precision_bits: int = 128, strategy: str = "deletion"):
        self.logger = logging.getLogger(__name__)
        self.poly_order_cap = poly_order_cap
        self.constants = GoldenConstants(precision_bits)
        self.strategy = strategy if strategy in STRATEGIES else "deletion"
        self._memo: Dict[CanonicalKey, Polynomial] = {}

    def _handle_error(self, operation: str, error: Exception) -> None:
        """Centralized error handling and logging."""
        self.logger.error(f"Error {operation}: {str(error)}")
        raise error

    @property
    def cache_size(self) -> int:
        return len(self._memo)

    def clear_cache(self) -> None:
        self._memo.clear()

    # Polynomials

    def chromatic_polynomial(self, graph: GraphLike) -> Polynomial:
        """Exact chromatic polynomial.

        Raises:
            OrderTooLarge: If the order exceeds ``poly_order_cap``
        """
        g = as_networkx(graph)
        if g.number_of_nodes() > self.poly_order_cap:
            self._handle_error(
                "computing chromatic polynomial",
                OrderTooLarge(f"Order {g.number_of_nodes()} exceeds cap {self.poly_order_cap}"),
            )
        if any(g.has_edge(v, v) for v in g.nodes):
            return Polynomial()
        return self._polynomial(_adjacency(g))

    def _polynomial(self, adj: Adjacency) -> Polynomial:
        n = len(adj)
        m = _edge_count(adj)
        if m == 0:
            return Polynomial.term(1, n)
        if m == n * (n - 1) // 2:
            return Polynomial.falling_factorial(n)
        key = canonical_key(adj)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        result = self._compute(adj, n, m)
        self._memo[key] = result
        return result

    def _compute(self, adj: Adjacency, n: int, m: int) -> Polynomial:
        parts = _components(adj)
        if len(parts) > 1:
            result = Polynomial.constant(1)
            for part in parts:
                result = result * self._polynomial(_induced(adj, part))
            return result
        if m == n - 1:
            t = Polynomial.variable()
            return t * (t - 1) ** (n - 1)
        split = self._clique_separator(adj)
        if split is not None:
            separator, side = split
            first = self._polynomial(_induced(adj, side | separator))
            second = self._polynomial(_induced(adj, set(adj) - side))
            return (first * second).divide_falling_factorial(len(separator))
        u, w = self._pick_edge(adj)
        if self.strategy == "addition":
            pair = self._pick_non_edge(adj)
            if pair is not None:
                a, b = pair
                return self._polynomial(_add_edge(adj, a, b)) + self._polynomial(_contract(adj, a, b))
        return self._polynomial(_delete_edge(adj, u, w)) - self._polynomial(_contract(adj, u, w))

    def _clique_separator(self, adj: Adjacency) -> Optional[Tuple[Set, Set]]:
        """A clique of size 1 to 3 whose removal disconnects the graph.

        Returns the separator and one side of the cut.
        """
        vertices = sorted(adj, key=repr)
        for v in vertices:
            ws = adj[v]
            if len(ws) < len(adj) - 1 and all(b in adj[a] for a, b in combinations(ws, 2)):
                return set(ws), {v}
        candidates: List[FrozenSet] = [frozenset([v]) for v in vertices]
        for u in vertices:
            for w in adj[u]:
                if repr(u) < repr(w):
                    candidates.append(frozenset([u, w]))
        for u in vertices:
            for w, x in combinations(sorted(adj[u], key=repr), 2):
                if x in adj[w] and repr(u) < repr(w):
                    candidates.append(frozenset([u, w, x]))
        for separator in candidates:
            if len(separator) >= len(adj) - 1:
                continue
            parts = _components(adj, separator)
            if len(parts) > 1:
                return set(separator), parts[0]
        return None

    @staticmethod
    def _pick_edge(adj: Adjacency) -> Tuple:
        """Edge in the most triangles."""
        best = None
        for u in sorted(adj, key=repr):
            for w in adj[u]:
                if repr(u) >= repr(w):
                    continue
                score = len(adj[u] & adj[w])
                if best is None or score > best[0]:
                    best = (score, u, w)
        return best[1], best[2]

    @staticmethod
    def _pick_non_edge(adj: Adjacency) -> Optional[Tuple]:
        best = None
        for u, w in combinations(sorted(adj, key=repr), 2):
            if w in adj[u]:
                continue
            score = len(adj[u] & adj[w])
            if best is None or score > best[0]:
                best = (score, u, w)
        return None if best is None else (best[1], best[2])

    def evaluate(self, polynomial: Polynomial, x):
        return polynomial.evaluate(x)

    def count_at(self, graph: Optional[GraphLike], t: int) -> int:
        """f(G, t); a missing graph (loop after identification) counts 0."""
        if graph is None:
            return 0
        return self.chromatic_polynomial(graph).evaluate(t)

    # Contraction identities

    def _identify(self, g: nx.Graph, u, w) -> Optional[nx.Graph]:
        if g.has_edge(u, w):
            return None
        return nx.contracted_nodes(g, u, w, self_loops=False)

    def four_contract_decomposition(self, graph: PlaneGraph, v: int) -> FourContractResult:
        """Split f(G,4) over the two opposite identifications of a degree-4 link.

        Raises:
            WrongDegree
        """
        if graph.degree(v) != 4:
            raise WrongDegree(f"Vertex {v} has degree {graph.degree(v)}, expected 4")
        ring = graph.link(v)
        rest = graph.to_networkx()
        rest.remove_node(v)
        first = self._identify(rest, ring[0], ring[2])
        second = self._identify(rest, ring[1], ring[3])
        return FourContractResult(
            vertex=v,
            first=first,
            second=second,
            first_count=self.count_at(first, 4),
            second_count=self.count_at(second, 4),
            total=self.count_at(graph, 4),
        )

    def five_contract_decomposition(self, graph: PlaneGraph, v: int) -> FiveContractResult:
        """Three brackets around a degree-5 vertex; the ring starts at its smallest neighbor.

        Raises:
            WrongDegree
        """
        if graph.degree(v) != 5:
            raise WrongDegree(f"Vertex {v} has degree {graph.degree(v)}, expected 5")
        ring = list(graph.rotation_from(v, min(graph.neighbors(v))))
        v1, v2, v3, v4, v5 = ring
        rest = graph.to_networkx()
        rest.remove_node(v)
        first = self._identify(rest, v2, v5)
        second = self._identify(rest, v2, v4)
        third = self._identify(rest, v3, v5)

        def bracket(base: Optional[nx.Graph], extra: List[Tuple[int, int]]) -> int:
            if base is None:
                return 0
            augmented = nx.Graph(base)
            augmented.add_edges_from(extra)
            return self.count_at(base, 4) - self.count_at(augmented, 4)

        return FiveContractResult(
            vertex=v,
            ring=ring,
            first_bracket=bracket(first, [(v1, v4), (v1, v3)]),
            second_bracket=bracket(second, [(v3, v1), (v3, v5)]),
            third_bracket=bracket(third, [(v4, v1)]),
            third_bracket_alt=bracket(first, [(v4, v1)]),
            total=self.count_at(graph, 4),
        )

    def quad_twist_ops(self, graph: PlaneGraph, quad: Tuple[int, int, int, int]) -> QuadTwistResult:
        """Flip the diagonal of an empty quad and contract either diagonal.

        ``quad`` is ``(x, y, z, l)`` with diagonal ``x z``.

        Raises:
            NoDiagonal, NotEmptyQuad
        """
        x, y, z, l = quad
        if not graph.adjacent(x, z):
            raise NoDiagonal(f"{x}-{z} is not an edge")
        faces = graph.face_sets
        if frozenset((x, y, z)) not in faces or frozenset((x, z, l)) not in faces:
            raise NotEmptyQuad(f"Quad {quad} is not two faces sharing {x}-{z}")
        if graph.adjacent(y, l):
            raise NotEmptyQuad(f"Quad {quad} already has edge {y}-{l}")
        g = graph.to_networkx()
        opened = nx.Graph(g)
        opened.remove_edge(x, z)
        flipped = nx.Graph(opened)
        flipped.add_edge(y, l)
        result = QuadTwistResult(
            quad=tuple(quad),
            original=self.chromatic_polynomial(g),
            flipped=self.chromatic_polynomial(flipped),
            contracted=self.chromatic_polynomial(nx.contracted_nodes(g, x, z, self_loops=False)),
            flip_contracted=self.chromatic_polynomial(
                nx.contracted_nodes(opened, y, l, self_loops=False)
            ),
        )
        c = self.constants
        at = c.tau_squared
        lhs = result.original(at) + result.flipped(at)
        rhs = c.power(-3) * (result.flip_contracted(at) + result.contracted(at))
        result.checks.append(self._compare("quad-twist-shifted", lhs, rhs))
        return result

    def empty_quads(self, graph: PlaneGraph) -> List[Tuple[int, int, int, int]]:
        """Every (x, y, z, l) whose diagonal x z can be flipped."""
        quads = []
        for x, z in graph.edges:
            y = graph.next_around(x, z)
            l = graph.next_around(z, x)
            if y != l and not graph.adjacent(y, l):
                quads.append((x, y, z, l))
        return quads

    # Golden-ratio identities

    def _compare(self, name: str, lhs, rhs, detail: str = "") -> IdentityCheck:
        scale = max(abs(lhs), abs(rhs), sympy.Float(1))
        residual = abs(lhs - rhs) / scale
        return IdentityCheck(
            name=name,
            lhs=str(sympy.N(lhs, 20)),
            rhs=str(sympy.N(rhs, 20)),
            residual=float(residual),
            holds=bool(residual <= self.constants.tolerance),
            detail=detail,
        )

    def tutte_identity_checks(self, graph: PlaneGraph, hub: Optional[int] = None) -> List[IdentityCheck]:
        """Golden identity, positivity, the tau-squared bound and vertex elimination."""
        c = self.constants
        n = graph.order
        polynomial = self.chromatic_polynomial(graph)
        at_golden = polynomial(c.tau_sqrt5)
        at_square = polynomial(c.tau_squared)
        checks = [
            self._compare(
                "golden-identity",
                at_golden,
                c.sqrt5 * c.power(3 * (n - 3)) * at_square ** 2,
                detail=f"n={n}",
            )
        ]
        checks.append(IdentityCheck(
            name="golden-positivity",
            lhs=str(sympy.N(at_golden, 20)),
            rhs="0",
            residual=0.0,
            holds=bool(at_golden > 0),
        ))
        bound = c.power(5 - n)
        checks.append(IdentityCheck(
            name="tau-squared-bound",
            lhs=str(sympy.N(abs(at_square), 20)),
            rhs=str(sympy.N(bound, 20)),
            residual=0.0,
            holds=bool(abs(at_square) <= bound * (1 + c.tolerance)),
        ))
        if n >= 4:
            hub = min(range(n), key=lambda w: (graph.degree(w), w)) if hub is None else hub
            checks.append(self.vertex_elimination_check(graph, hub))
        return checks

    def vertex_elimination_check(self, graph: PlaneGraph, hub: int) -> IdentityCheck:
        """f(G, tau^2) against (-1)^m tau^(1-m) f(G - hub, tau^2) with m the hub degree."""
        c = self.constants
        m = graph.degree(hub)
        rest = graph.to_networkx()
        rest.remove_node(hub)
        lhs = self.chromatic_polynomial(graph)(c.tau_squared)
        rhs = (-1) ** m * c.power(1 - m) * self.chromatic_polynomial(rest)(c.tau_squared)
        return self._compare("vertex-elimination", lhs, rhs, detail=f"hub={hub} degree={m}")

    def factorization_check(self, graph: GraphLike, separator: Set) -> Optional[bool]:
        """f(G) f(K_k) = f(G1) f(G2) across a clique separator; None if not a clique cut."""
        g = as_networkx(graph)
        if any(not g.has_edge(a, b) for a, b in combinations(separator, 2)):
            return None
        rest = g.subgraph(set(g.nodes) - set(separator))
        parts = list(nx.connected_components(rest))
        if len(parts) < 2:
            return None
        side = set(parts[0])
        first = g.subgraph(side | set(separator))
        second = g.subgraph(set(g.nodes) - side)
        lhs = self.chromatic_polynomial(g) * Polynomial.falling_factorial(len(separator))
        return lhs == self.chromatic_polynomial(first) * self.chromatic_polynomial(second)
