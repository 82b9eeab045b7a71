"""
Exact arithmetic in Q(√2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Union

from ..exceptions import ParseError


Number = Union[int, Fraction, "Scalar"]

_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*(r2|√2)?\s*")


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@total_ordering
@dataclass(frozen=True)
class Scalar:
    """a + b·√2 with rational a and b."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def coerce(cls, value: Number) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value))
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"Cannot interpret {value!r} as an element of Q(√2)")

    @classmethod
    def parse(cls, token: str, source: str = "<scalar>", line: Optional[int] = None) -> Scalar:
        """Parse "p/q", "p/q+r/s r2", "-r2", "3 r2" and friends (√2 also accepted)."""
        text = token.strip()
        if not text:
            raise ParseError("Empty coordinate", source, line)
        a = b = Fraction(0)
        pos = 0
        first = True
        while pos < len(text):
            match = _TERM.match(text, pos)
            sign, number, root = match.groups()
            if match.end() == pos or (number is None and root is None) or (sign is None and not first):
                raise ParseError(f"Cannot parse coordinate {token!r}", source, line)
            value = Fraction(number) if number else Fraction(1)
            if sign == "-":
                value = -value
            if root:
                b += value
            else:
                a += value
            pos = match.end()
            first = False
        return cls(a, b)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Number) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = Scalar.coerce(other)
        return Scalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(-self.a, -self.b)

    def __sub__(self, other: Number) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other: Number) -> Scalar:
        return Scalar.coerce(other) - self

    def __mul__(self, other: Number) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = Scalar.coerce(other)
        return Scalar(self.a * other.a + 2 * self.b * other.b, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def conjugate(self) -> Scalar:
        return Scalar(self.a, -self.b)

    def norm(self) -> Fraction:
        """(a + b√2)(a − b√2) = a² − 2b², always rational."""
        return self.a * self.a - 2 * self.b * self.b

    def inverse(self) -> Scalar:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("Division by zero in Q(√2)")
        return Scalar(self.a / n, -self.b / n)

    def __truediv__(self, other: Number) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other: Number) -> Scalar:
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> Scalar:
        if exponent < 0:
            return self.inverse() ** -exponent
        result, base = Scalar(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- order --------------------------------------------------------------

    def sign(self) -> int:
        """Exact sign, comparing a² with 2b² when a and b disagree."""
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        return sa if self.a * self.a > 2 * self.b * self.b else sb

    def __abs__(self) -> Scalar:
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, Scalar):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __lt__(self, other: Number) -> bool:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return (self - other).sign() < 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 2 ** 0.5

    def is_rational(self) -> bool:
        return self.b == 0

    # -- text ---------------------------------------------------------------

    def to_token(self) -> str:
        """Ray-file form: "p/q", "r/s r2" or "p/q+r/s r2"."""
        if self.b == 0:
            return str(self.a)
        root = "r2" if abs(self.b) == 1 else f"{abs(self.b)} r2"
        if self.a == 0:
            return f"-{root}" if self.b < 0 else root
        return f"{self.a}{'-' if self.b < 0 else '+'}{root}"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        root = "√2" if abs(self.b) == 1 else f"{abs(self.b)}√2"
        if self.a == 0:
            return f"-{root}" if self.b < 0 else root
        return f"{self.a}{'-' if self.b < 0 else '+'}{root}"

    def __repr__(self) -> str:
        return f"Scalar({self.a}, {self.b})"


ZERO = Scalar(0)
ONE = Scalar(1)
SQRT2 = Scalar(0, 1)
