"""
Exact facet enumeration by the double description method.

A polytope conv(V) ⊂ Qᵈ is turned into its dual cone
{(b, a) : b + a·v ≥ 0 for all v ∈ V}; the extreme rays of that cone are the
facets and its lineality space is the affine hull. All arithmetic is on
Python integers, vertices with fractional entries are scaled first.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..exceptions import DimensionMismatchError, SchemeError


logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]


def _primitive(vec: Sequence[int]) -> IntVector:
    g = reduce(gcd, (abs(x) for x in vec), 0)
    return tuple(vec) if g in (0, 1) else tuple(x // g for x in vec)


def _integral(values: Sequence[Any]) -> IntVector:
    """Positive rescaling of a rational vector to integers."""
    fracs = [Fraction(v) for v in values]
    scale = reduce(lcm, (f.denominator for f in fracs), 1)
    return tuple(int(f * scale) for f in fracs)


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


def _combine(alpha: int, u: Sequence[int], beta: int, v: Sequence[int]) -> IntVector:
    return _primitive([alpha * x - beta * y for x, y in zip(u, v)])


def _rref(rows: Sequence[Sequence[Any]], columns: Sequence[int]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form, pivoting over `columns` in the given order."""
    matrix = [[Fraction(x) for x in row] for row in rows]
    pivots: List[int] = []
    r = 0
    for c in columns:
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][c]
        matrix[r] = [x / lead for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c] != 0:
                factor = matrix[i][c]
                matrix[i] = [x - factor * y for x, y in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == len(matrix):
            break
    return matrix[:r], pivots


def rank(rows: Sequence[Sequence[Any]]) -> int:
    if not rows:
        return 0
    return len(_rref(rows, range(len(rows[0])))[1])


@dataclass(frozen=True)
class Inequality:
    """coeffs·x ≤ bound, or coeffs·x = bound when `equality` is set."""

    coeffs: IntVector
    bound: int
    equality: bool = False

    def value(self, x: Sequence[Any]) -> Fraction:
        if len(x) != len(self.coeffs):
            raise DimensionMismatchError("Vector does not match the inequality", len(self.coeffs), len(x))
        return sum((Fraction(c) * Fraction(v) for c, v in zip(self.coeffs, x)), Fraction(0))

    def holds(self, x: Sequence[Any]) -> bool:
        value = self.value(x)
        return value == self.bound if self.equality else value <= self.bound

    def is_tight(self, x: Sequence[Any]) -> bool:
        return self.value(x) == self.bound

    def to_text(self) -> str:
        op = "=" if self.equality else "<="
        return " ".join(str(c) for c in self.coeffs) + f" {op} {self.bound}"

    def pretty(self, names: Sequence[str]) -> str:
        parts = []
        for c, name in zip(self.coeffs, names):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(f"{sign} {mag}{name}")
        lhs = " ".join(parts).lstrip("+ ") or "0"
        if lhs.startswith("- "):
            lhs = "-" + lhs[2:]
        return f"{lhs} {'=' if self.equality else '<='} {self.bound}"

    def to_dict(self) -> Dict[str, Any]:
        return {"coeffs": list(self.coeffs), "bound": self.bound}


@dataclass
class PolytopeH:
    """Facet inequalities plus the equations of the affine hull."""

    dimension: int
    inequalities: List[Inequality] = field(default_factory=list)
    equations: List[Inequality] = field(default_factory=list)

    @property
    def full_dimensional(self) -> bool:
        return not self.equations

    @property
    def affine_dimension(self) -> int:
        return self.dimension - len(self.equations)

    def contains(self, x: Sequence[Any]) -> bool:
        return all(f.holds(x) for f in self.equations) and all(f.holds(x) for f in self.inequalities)

    def violated(self, x: Sequence[Any]) -> Optional[Inequality]:
        """First equation or inequality that x breaks."""
        for f in self.equations + self.inequalities:
            if not f.holds(x):
                return f
        return None

    def to_text(self) -> str:
        return "".join(f.to_text() + "\n" for f in self.equations + self.inequalities)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dimension": self.dimension,
            "facets": [f.to_dict() for f in self.inequalities],
            "equations": [f.to_dict() for f in self.equations],
        }


class _DoubleDescription:
    """Incremental double description of {y : r·y ≥ 0 for every inserted row r}."""

    def __init__(self, dim: int):
        self.dim = dim
        self.lineality: List[IntVector] = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
        self.rays: List[IntVector] = []
        self.zeros: List[FrozenSet[int]] = []
        self.inserted = 0

    def insert(self, row: IntVector) -> None:
        k = self.inserted
        self.inserted += 1

        index = next((i for i, l in enumerate(self.lineality) if _dot(row, l) != 0), None)
        if index is not None:
            pivot = self.lineality[index]
            s = _dot(row, pivot)
            if s < 0:
                pivot, s = tuple(-x for x in pivot), -s
            remaining = []
            for i, l in enumerate(self.lineality):
                if i == index:
                    continue
                t = _dot(row, l)
                remaining.append(_combine(s, l, t, pivot) if t else l)
            self.lineality = remaining
            self.rays = [_combine(s, r, _dot(row, r), pivot) if _dot(row, r) else r for r in self.rays]
            self.zeros = [z | {k} for z in self.zeros]
            self.rays.append(pivot)
            self.zeros.append(frozenset(range(k)))
            return

        values = [_dot(row, r) for r in self.rays]
        positive = [i for i, v in enumerate(values) if v > 0]
        negative = [i for i, v in enumerate(values) if v < 0]
        zero = [i for i, v in enumerate(values) if v == 0]

        new_rays = [self.rays[i] for i in positive]
        new_zeros = [self.zeros[i] for i in positive]
        for i in zero:
            new_rays.append(self.rays[i])
            new_zeros.append(self.zeros[i] | {k})
        for p in positive:
            for q in negative:
                common = self.zeros[p] & self.zeros[q]
                if self._adjacent(p, q, common):
                    new_rays.append(_combine(values[p], self.rays[q], values[q], self.rays[p]))
                    new_zeros.append(common | {k})
        self.rays = new_rays
        self.zeros = new_zeros

    def _adjacent(self, p: int, q: int, common: FrozenSet[int]) -> bool:
        return not any(
            i != p and i != q and common <= z
            for i, z in enumerate(self.zeros)
        )


def affine_hull(vertices: Sequence[Sequence[Any]]) -> List[Inequality]:
    """Equations a·x = b satisfied by every vertex, in reduced canonical form."""
    return _describe(vertices).equations


def _check_vertices(vertices: Sequence[Sequence[Any]]) -> int:
    if not vertices:
        raise SchemeError("At least one vertex is needed")
    dims = {len(v) for v in vertices}
    if len(dims) != 1:
        first, second = sorted(dims)[:2]
        raise DimensionMismatchError("Vertices have different dimensions", first, second)
    return dims.pop()


def _describe(vertices: Sequence[Sequence[Any]]) -> PolytopeH:
    d = _check_vertices(vertices)
    rows = sorted({_primitive(_integral([1, *v])) for v in vertices})
    dd = _DoubleDescription(d + 1)
    for row in rows:
        dd.insert(row)

    # y = (b, a) encodes b + a·x ≥ 0, i.e. (-a)·x ≤ b
    columns = list(range(1, d + 1)) + [0]
    reduced, pivots = _rref(dd.lineality, columns) if dd.lineality else ([], [])
    equations = []
    for row in reduced:
        ints = _primitive(_integral(row))
        coeffs, bound = tuple(-x for x in ints[1:]), ints[0]
        lead = next((x for x in coeffs if x != 0), bound)
        if lead < 0:
            coeffs, bound = tuple(-x for x in coeffs), -bound
        equations.append(Inequality(coeffs, bound, equality=True))

    found = set()
    for ray in dd.rays:
        vec = [Fraction(x) for x in ray]
        for row, c in zip(reduced, pivots):
            if vec[c] != 0:
                factor = vec[c]
                vec = [x - factor * y for x, y in zip(vec, row)]
        ints = _primitive(_integral(vec))
        if all(x == 0 for x in ints[1:]):
            continue
        found.add(Inequality(tuple(-x for x in ints[1:]), ints[0]))

    ordered = sorted(found, key=lambda f: (f.coeffs, f.bound))
    return PolytopeH(d, ordered, equations)


def facets(vertices: Sequence[Sequence[Any]]) -> PolytopeH:
    """The complete irredundant H-description of conv(vertices)."""
    poly = _describe(vertices)
    logger.info(
        f"Hull of {len(vertices)} vertices in dimension {poly.dimension}: "
        f"{len(poly.inequalities)} facets, {len(poly.equations)} equations"
    )
    return poly


def tight_vertices(inequality: Inequality, vertices: Sequence[Sequence[Any]]) -> List[Sequence[Any]]:
    return [v for v in vertices if inequality.is_tight(v)]


def check_dual_description(poly: PolytopeH, vertices: Sequence[Sequence[Any]]) -> List[str]:
    """Consistency problems between a facet list and its vertices; empty when consistent.

    Every vertex must satisfy everything, lie on at least dim facets, and
    every facet must be tight at dim affinely independent vertices.
    """
    problems = []
    dim = poly.affine_dimension
    for v in vertices:
        broken = poly.violated(v)
        if broken is not None:
            problems.append(f"vertex {tuple(v)} violates {broken.to_text()}")
        tight = sum(1 for f in poly.inequalities if f.is_tight(v))
        if poly.inequalities and tight < dim:
            problems.append(f"vertex {tuple(v)} lies on {tight} < {dim} facets")
    for f in poly.inequalities:
        support = [[1, *v] for v in tight_vertices(f, vertices)]
        if rank(support) < dim:
            problems.append(f"facet {f.to_text()} is tight at fewer than {dim} independent vertices")
    return problems
