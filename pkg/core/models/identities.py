"""Golden-ratio constants and identity check results."""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import networkx as nx
import sympy

from core.models.polynomial import Polynomial


@dataclass(frozen=True)
class GoldenConstants:
    """tau = (1 + sqrt 5) / 2 and friends at a fixed binary precision."""

    precision_bits: int = 128

    @property
    def digits(self) -> int:
        return int(math.ceil(self.precision_bits * math.log10(2))) + 1

    @property
    def tau(self) -> sympy.Float:
        return sympy.GoldenRatio.evalf(self.digits)

    @property
    def sqrt5(self) -> sympy.Float:
        return sympy.sqrt(5).evalf(self.digits)

    @property
    def tau_squared(self) -> sympy.Float:
        return (sympy.GoldenRatio ** 2).evalf(self.digits)

    @property
    def tau_sqrt5(self) -> sympy.Float:
        """tau * sqrt 5, which equals tau + 2."""
        return (sympy.GoldenRatio * sympy.sqrt(5)).evalf(self.digits)

    def power(self, exponent: int) -> sympy.Float:
        return (sympy.GoldenRatio ** exponent).evalf(self.digits)

    @property
    def tolerance(self) -> sympy.Float:
        return sympy.Float(2, self.digits) ** (-(self.precision_bits // 2))


@dataclass
class IdentityCheck:
    """Both sides of one numeric identity and whether they agree."""

    name: str
    lhs: str
    rhs: str
    residual: float
    holds: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "holds": self.holds,
            "detail": self.detail,
        }


@dataclass
class FourContractResult:
    """Deletion of a degree-4 vertex followed by the two opposite identifications."""

    vertex: int
    first: Optional[nx.Graph]
    second: Optional[nx.Graph]
    first_count: int
    second_count: int
    total: int

    @property
    def holds(self) -> bool:
        return self.first_count + self.second_count == self.total


@dataclass
class FiveContractResult:
    """Three bracket values around a degree-5 vertex.

    ``third_bracket`` uses the graph with the third pair identified;
    ``third_bracket_alt`` reuses the first contracted graph.
    """

    vertex: int
    ring: List[int]
    first_bracket: int
    second_bracket: int
    third_bracket: int
    third_bracket_alt: int
    total: int

    @property
    def holds(self) -> bool:
        return self.first_bracket + self.second_bracket + self.third_bracket == self.total

    @property
    def holds_alt(self) -> bool:
        return self.first_bracket + self.second_bracket + self.third_bracket_alt == self.total

    @property
    def brackets_nonnegative(self) -> bool:
        return min(self.first_bracket, self.second_bracket, self.third_bracket, self.third_bracket_alt) >= 0


@dataclass
class QuadTwistResult:
    """Polynomials of the graph, its flipped quad and the two contractions."""

    quad: tuple
    original: Polynomial
    flipped: Polynomial
    contracted: Polynomial
    flip_contracted: Polynomial
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def residual(self) -> Polynomial:
        return self.original - self.flipped - self.flip_contracted + self.contracted
