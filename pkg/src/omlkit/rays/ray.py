"""
Projective rays over Q(√2).

Two rays are equal iff their coordinate vectors are proportional. Each ray
carries a canonical representative in Z[√2]: denominators cleared, integer
content removed and first nonzero coordinate positive, choosing between the
scalings by 1 and by √2 whichever gives the smaller coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, Optional, Sequence, Tuple

from ..exceptions import ConstructionError, DimensionMismatchError, ParallelRaysError, ParseError
from .scalar import SQRT2, Number, Scalar


def _clear(coords: Sequence[Scalar]) -> Tuple[Scalar, ...]:
    """Scale by a positive rational so all parts are integers with gcd 1."""
    denominators = [x.a.denominator for x in coords] + [x.b.denominator for x in coords]
    scale = lcm(*denominators)
    integral = [Scalar(x.a * scale, x.b * scale) for x in coords]
    content = 0
    for x in integral:
        content = gcd(content, int(x.a), int(x.b))
    return tuple(Scalar(x.a / content, x.b / content) for x in integral)


def _height(coords: Sequence[Scalar]) -> Fraction:
    return sum((abs(x.a) + abs(x.b) for x in coords), Fraction(0))


class Ray:
    """A one-dimensional subspace spanned by a nonzero vector over Q(√2)."""

    def __init__(self, coords: Iterable[Number]):
        values = tuple(Scalar.coerce(x) for x in coords)
        if not values:
            raise DimensionMismatchError("A ray needs at least one coordinate", expected=1, actual=0)
        pivot = next((x for x in values if x), None)
        if pivot is None:
            raise ConstructionError("The zero vector does not span a ray", "Ray")
        inverse = pivot.inverse()
        self._key: Tuple[Scalar, ...] = tuple(x * inverse for x in values)

    @classmethod
    def parse(cls, line: str, source: str = "<ray>", lineno: Optional[int] = None) -> Ray:
        """Comma-separated coordinates, e.g. "1, -1, r2"."""
        parts = line.split(",")
        coords = [Scalar.parse(part, source, lineno) for part in parts]
        try:
            return cls(coords)
        except ConstructionError as e:
            raise ParseError(e.message, source, lineno) from None

    @property
    def dim(self) -> int:
        return len(self._key)

    @property
    def key(self) -> Tuple[Scalar, ...]:
        """Representative with first nonzero coordinate equal to 1."""
        return self._key

    @cached_property
    def canonical(self) -> Tuple[Scalar, ...]:
        plain = _clear(self._key)
        scaled = _clear(tuple(x * SQRT2 for x in self._key))
        return scaled if _height(scaled) < _height(plain) else plain

    def sort_key(self) -> Tuple:
        return tuple((x.a, x.b) for x in self.canonical)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ray):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __lt__(self, other: Ray) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "(" + " ".join(str(x) for x in self.canonical) + ")"

    def __repr__(self) -> str:
        return f"Ray{self}"

    def to_line(self) -> str:
        return ",".join(x.to_token() for x in self.canonical)

    def scaled(self, factor: Number) -> Tuple[Scalar, ...]:
        return tuple(x * factor for x in self.canonical)


def dot(u: Ray, v: Ray) -> Scalar:
    """Exact inner product of the canonical representatives."""
    if u.dim != v.dim:
        raise DimensionMismatchError("Rays live in different dimensions", expected=u.dim, actual=v.dim)
    return sum((x * y for x, y in zip(u.canonical, v.canonical)), Scalar(0))


def is_orthogonal(u: Ray, v: Ray) -> bool:
    return not dot(u, v)


def nor(u: Ray, v: Ray) -> Ray:
    """The ray orthogonal to both u and v in R³ (their cross product)."""
    for r in (u, v):
        if r.dim != 3:
            raise DimensionMismatchError("nor is defined on rays in R³", expected=3, actual=r.dim)
    (a1, a2, a3), (b1, b2, b3) = u.canonical, v.canonical
    cross = (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
    if not any(cross):
        raise ParallelRaysError("nor of parallel rays is a plane, not a ray", (str(u), str(v)))
    return Ray(cross)
