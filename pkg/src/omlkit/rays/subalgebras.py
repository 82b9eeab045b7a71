"""
Finite subalgebras 2^q × MO_n1 × ... × MO_nk realised by rays in R^n.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Dict, List, Sequence, Tuple

from ..exceptions import ConstructionError
from .ray import Ray, is_orthogonal


logger = logging.getLogger(__name__)

# one factor = complementary pairs of named vectors
Factor = Sequence[Tuple[Tuple[str, Ray], Tuple[str, Ray]]]


@dataclass
class Check:
    name: str
    holds: bool
    expected: bool = True

    @property
    def passed(self) -> bool:
        return self.holds == self.expected

    def to_dict(self) -> Dict[str, Any]:
        return {"check": self.name, "holds": self.holds, "expected": self.expected, "passed": self.passed}


@dataclass
class ProductCheckReport:
    """Orthogonality checks for an MO-product pattern of vectors."""

    dimension: int
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dimension": self.dimension,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def mo_product_check(factors: Sequence[Factor]) -> ProductCheckReport:
    """Check the MO_m1 × MO_m2 × ... pattern.

    Inside a factor each vector is orthogonal to its partner and to nothing
    else of the factor; vectors of different factors are orthogonal; choosing
    one complementary pair per factor gives an orthogonal frame.
    """
    dims = {ray.dim for factor in factors for pair in factor for _, ray in pair}
    if len(dims) != 1:
        raise ConstructionError("All vectors must share one dimension", "mo_product_check")
    report = ProductCheckReport(dimension=dims.pop())

    for factor in factors:
        named = [item for pair in factor for item in pair]
        for (x, u), (y, v) in factor:
            report.checks.append(Check(f"{x} ⊥ {y}", is_orthogonal(u, v)))
        partners = {frozenset((x, y)) for (x, _), (y, _) in factor}
        for (x, u), (y, v) in combinations(named, 2):
            if frozenset((x, y)) not in partners:
                report.checks.append(Check(f"{x} ⊥ {y}", is_orthogonal(u, v), expected=False))

    for f1, f2 in combinations(factors, 2):
        for x, u in (item for pair in f1 for item in pair):
            for y, v in (item for pair in f2 for item in pair):
                report.checks.append(Check(f"{x} ⊥ {y}", is_orthogonal(u, v)))

    for choice in product(*factors):
        frame = [item for pair in choice for item in pair]
        names = ",".join(name for name, _ in frame)
        holds = all(is_orthogonal(u, v) for (_, u), (_, v) in combinations(frame, 2))
        report.checks.append(Check(f"frame {{{names}}}", holds and len(frame) == report.dimension))

    logger.debug(f"MO product check in R^{report.dimension}: {len(report.checks)} checks")
    return report


def _unit(n: int, *entries: Tuple[int, int]) -> Ray:
    coords = [0] * n
    for index, value in entries:
        coords[index] = value
    return Ray(coords)


def r4_vectors() -> Dict[str, Ray]:
    """a, a', b, b' span the first two axes of R⁴; c, c', d, d' the last two."""
    return {
        "a": _unit(4, (0, 1)),
        "a'": _unit(4, (1, 1)),
        "b": _unit(4, (0, 1), (1, 1)),
        "b'": _unit(4, (0, 1), (1, -1)),
        "c": _unit(4, (2, 1)),
        "c'": _unit(4, (3, 1)),
        "d": _unit(4, (2, 1), (3, 1)),
        "d'": _unit(4, (2, 1), (3, -1)),
    }


def r4_product_check() -> ProductCheckReport:
    """MO_2 × MO_2 in R⁴; {a,a',c,c'} and {b,b',d,d'} are orthogonal frames."""
    v = r4_vectors()
    factors = [
        [(("a", v["a"]), ("a'", v["a'"])), (("b", v["b"]), ("b'", v["b'"]))],
        [(("c", v["c"]), ("c'", v["c'"])), (("d", v["d"]), ("d'", v["d'"]))],
    ]
    return mo_product_check(factors)


def r6_vectors() -> List[Dict[str, Ray]]:
    """Three MO_2 factors in R⁶, one per coordinate plane."""
    rows = []
    for k in range(3):
        i, j = 2 * k, 2 * k + 1
        x, y = f"x{k + 1}", f"y{k + 1}"
        rows.append({
            x: _unit(6, (i, 1)),
            f"{x}'": _unit(6, (j, 1)),
            y: _unit(6, (i, 1), (j, 1)),
            f"{y}'": _unit(6, (i, 1), (j, -1)),
        })
    return rows


def r6_product_check() -> ProductCheckReport:
    """MO_2 × MO_2 × MO_2 in R⁶, checked factor by factor and across factors."""
    factors = []
    for k, row in enumerate(r6_vectors(), start=1):
        x, y = f"x{k}", f"y{k}"
        factors.append([((x, row[x]), (f"{x}'", row[f"{x}'"])), ((y, row[y]), (f"{y}'", row[f"{y}'"]))])
    return mo_product_check(factors)


def embeddable(q: int, factors: Sequence[int], n: int) -> bool:
    """Whether 2^q × MO_n1 × ... × MO_nk is a subalgebra of the subspace lattice of R^n.

    Holds iff q + 2k ≤ n, and q ≠ 0 when n is odd.
    """
    if q < 0 or n < 0:
        raise ConstructionError("q and n must be non-negative", "embeddable")
    if any(m < 2 for m in factors):
        raise ConstructionError("MO factors need at least two complementary pairs", "embeddable")
    k = len(factors)
    if q + 2 * k > n:
        return False
    return not (n % 2 == 1 and q == 0)
