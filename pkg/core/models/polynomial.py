"""Exact integer polynomials in one variable."""

from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple, Union


Number = Union[int, Any]


def _strip(coefficients: Sequence[int]) -> Tuple[int, ...]:
    values = list(coefficients)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial in t with integer coefficients, lowest degree first."""

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _strip(int(c) for c in self.coefficients))

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls((value,))

    @classmethod
    def term(cls, coefficient: int, exponent: int) -> "Polynomial":
        return cls((0,) * exponent + (coefficient,))

    @classmethod
    def variable(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def falling_factorial(cls, k: int) -> "Polynomial":
        """t (t - 1) ... (t - k + 1); the chromatic polynomial of K_k."""
        result = cls.constant(1)
        for i in range(k):
            result = result * cls((-i, 1))
        return result

    # Structure

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, exponent: int) -> int:
        if exponent < 0:
            raise IndexError("No negative exponents")
        if exponent >= len(self.coefficients):
            return 0
        return self.coefficients[exponent]

    def signs_alternate(self) -> bool:
        """Nonzero coefficients alternate in sign from the leading term down."""
        degree = self.degree
        for exponent, c in enumerate(self.coefficients):
            if c == 0:
                continue
            expected = 1 if (degree - exponent) % 2 == 0 else -1
            if c * expected < 0:
                return False
        return True

    # Arithmetic

    def _coerce(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other: Any) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(tuple(self[i] + other[i] for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Any) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: Any) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return Polynomial()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return Polynomial(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        result = Polynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def divide_linear(self, root: int) -> "Polynomial":
        """Exact division by (t - root); raises ValueError on a remainder."""
        if self.is_zero():
            return self
        quotient = [0] * self.degree
        carry = 0
        for exponent in range(self.degree, 0, -1):
            carry = carry * root + self.coefficients[exponent]
            quotient[exponent - 1] = carry
        remainder = carry * root + self.coefficients[0]
        if remainder != 0:
            raise ValueError(f"t - {root} does not divide {self}")
        return Polynomial(tuple(quotient))

    def divide_falling_factorial(self, k: int) -> "Polynomial":
        result = self
        for root in range(k):
            result = result.divide_linear(root)
        return result

    # Evaluation

    def evaluate(self, x: Number) -> Number:
        """Horner evaluation; exact for integers, keeps the precision of reals."""
        result: Number = 0
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    __call__ = evaluate

    # Serialization

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, values: Sequence[Union[str, int]]) -> "Polynomial":
        return cls(tuple(int(v) for v in values))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exponent in range(self.degree, -1, -1):
            c = self.coefficients[exponent]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "t" if exponent == 1 else f"t^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text
