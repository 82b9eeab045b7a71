"""
Exact phase-I simplex over Fractions with Bland's rule, used to decide
whether a probability vector is a convex combination of vertices.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..exceptions import DimensionMismatchError, SchemeError
from .hull import Inequality, PolytopeH, facets
from .scheme import EventScheme


logger = logging.getLogger(__name__)


class SimplexTableau:
    """Tableau for  min Σ artificials  s.t.  A x + I s = b,  x, s ≥ 0,  b ≥ 0."""

    def __init__(self, a: Sequence[Sequence[Any]], b: Sequence[Any]):
        self.m = len(a)
        self.n = len(a[0]) if a else 0
        self.rows: List[List[Fraction]] = []
        self.rhs: List[Fraction] = []
        for i, (row, value) in enumerate(zip(a, b)):
            flip = -1 if Fraction(value) < 0 else 1
            slack = [Fraction(int(k == i)) for k in range(self.m)]
            self.rows.append([flip * Fraction(x) for x in row] + slack)
            self.rhs.append(flip * Fraction(value))
        self.basis = [self.n + i for i in range(self.m)]
        # reduced costs of the phase-I objective
        self.reduced = [-sum((r[j] for r in self.rows), Fraction(0)) for j in range(self.n)] + [Fraction(0)] * self.m
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        lead = self.rows[i][j]
        self.rows[i] = [x / lead for x in self.rows[i]]
        self.rhs[i] /= lead
        for k in range(self.m):
            if k != i and self.rows[k][j] != 0:
                f = self.rows[k][j]
                self.rows[k] = [x - f * y for x, y in zip(self.rows[k], self.rows[i])]
                self.rhs[k] -= f * self.rhs[i]
        f = self.reduced[j]
        self.reduced = [x - f * y for x, y in zip(self.reduced, self.rows[i])]
        self.basis[i] = j
        self.pivots += 1

    @property
    def objective(self) -> Fraction:
        """Sum of the artificial variables still in the basis."""
        return sum((self.rhs[i] for i, j in enumerate(self.basis) if j >= self.n), Fraction(0))

    def bland_step(self) -> str:
        entering = next((j for j, d in enumerate(self.reduced) if d < 0), None)
        if entering is None:
            return "optimal"
        candidates = [
            (self.rhs[i] / self.rows[i][entering], self.basis[i], i)
            for i in range(self.m)
            if self.rows[i][entering] > 0
        ]
        if not candidates:
            return "unbounded"
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return "go_on"

    def solve(self) -> str:
        while True:
            status = self.bland_step()
            if status != "go_on":
                return status

    def solution(self) -> List[Fraction]:
        x = [Fraction(0)] * self.n
        for i, j in enumerate(self.basis):
            if j < self.n:
                x[j] = self.rhs[i]
        return x


def feasible_point(a: Sequence[Sequence[Any]], b: Sequence[Any]) -> Optional[List[Fraction]]:
    """A point x ≥ 0 with A x = b, or None."""
    tableau = SimplexTableau(a, b)
    tableau.solve()
    logger.debug(f"Phase I finished after {tableau.pivots} pivots, residual {tableau.objective}")
    if tableau.objective != 0:
        return None
    return tableau.solution()


@dataclass
class Membership:
    """Outcome of a classicality test, with its certificate."""

    classical: bool
    weights: Dict[Tuple[int, ...], Fraction] = field(default_factory=dict)
    violated: Optional[Inequality] = None
    violation: Optional[Fraction] = None

    def __bool__(self) -> bool:
        return self.classical

    def to_dict(self) -> Dict[str, Any]:
        doc: Dict[str, Any] = {"classical": self.classical}
        if self.classical:
            doc["weights"] = [{"vertex": list(v), "weight": str(w)} for v, w in self.weights.items()]
        else:
            doc["violated"] = self.violated.to_dict() if self.violated else None
            doc["value"] = str(self.violation) if self.violation is not None else None
        return doc


def is_classical(p: Sequence[Any], scheme: Union[EventScheme, Sequence[Sequence[int]]],
                 polytope: Optional[PolytopeH] = None) -> Membership:
    """Decide p ∈ conv(vertices) by exact LP feasibility.

    Feasible: convex weights over the vertices. Infeasible: the first facet
    (or hull equation) p violates, computed from `polytope` or on demand.
    """
    vertices = scheme.vertices() if isinstance(scheme, EventScheme) else list(scheme)
    if not vertices:
        raise SchemeError("Membership needs at least one vertex")
    point = [Fraction(x) for x in p]
    dim = len(vertices[0])
    if len(point) != dim:
        raise DimensionMismatchError("Vector does not match the scheme", dim, len(point))

    # columns are vertices; rows are the coordinates plus Σλ = 1
    a = [[Fraction(v[j]) for v in vertices] for j in range(dim)] + [[Fraction(1)] * len(vertices)]
    b = point + [Fraction(1)]
    weights = feasible_point(a, b)
    if weights is not None:
        certificate = {tuple(v): w for v, w in zip(vertices, weights) if w != 0}
        return Membership(True, certificate)

    poly = polytope if polytope is not None else facets(vertices)
    broken = poly.violated(point)
    return Membership(False, violated=broken, violation=broken.value(point) if broken else None)
