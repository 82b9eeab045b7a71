"""
The Peres configuration of 33 rays in R³ and its generator sets.

The scripted derivation rebuilds the 33 rays from three generators using
only the nor operation; every row records its expected result and is checked
exactly while replaying.
"""

import logging
import re
from collections import Counter
from itertools import permutations, product
from typing import Dict, Iterable, List, Sequence, Tuple

from ..exceptions import DerivationError, ParallelRaysError
from .ray import Ray, nor
from .scalar import SQRT2, Scalar


logger = logging.getLogger(__name__)

R2 = SQRT2

# nor-expressions over the generators a, b, c ("+" is nor) and the rays they evaluate to
DERIVATION: Tuple[Tuple[str, Tuple[object, object, object]], ...] = (
    ("(a+b)", (0, 0, 1)),
    ("(a+c)", (0, 1, -1)),
    ("(a+(a+b))", (0, 1, 0)),
    ("(a+(a+c))", (0, 1, 1)),
    ("(b+(a+b))", (1, -1, 0)),
    ("(c+(a+b))", (-1, R2, 0)),
    ("(c+(a+c))", (R2, -1, -1)),
    ("(c+(a+(a+b)))", (-1, 0, R2)),
    ("((a+b)+(c+(a+b)))", (R2, 1, 0)),
    ("((a+b)+(c+(a+c)))", (1, R2, 0)),
    ("((a+(a+b))+(c+(a+c)))", (1, 0, R2)),
    ("((a+(a+c))+(c+(a+b)))", (R2, 1, -1)),
    ("((a+(a+b))+(c+(a+(a+b))))", (R2, 0, 1)),
    ("((a+b)+((a+b)+(c+(a+c))))", (R2, -1, 0)),
    ("((a+(a+c))+(c+(a+(a+b))))", (R2, -1, 1)),
    ("(b+((a+(a+b))+(c+(a+(a+b)))))", (-1, 1, R2)),
    ("(a+(b+((a+(a+b))+(c+(a+(a+b))))))", (0, R2, -1)),
    ("((a+(a+b))+((a+(a+b))+(c+(a+c))))", (R2, 0, -1)),
    ("(b+(b+((a+(a+b))+(c+(a+(a+b))))))", (1, -1, R2)),
    ("(a+(a+(b+((a+(a+b))+(c+(a+(a+b)))))))", (0, 1, R2)),
    ("(a+(b+(b+((a+(a+b))+(c+(a+(a+b)))))))", (0, R2, 1)),
    ("((b+(a+b))+((a+(a+b))+(c+(a+(a+b)))))", (-1, -1, R2)),
    ("(a+(a+(b+(b+((a+(a+b))+(c+(a+(a+b))))))))", (0, -1, R2)),
    ("((b+(a+b))+(a+(b+((a+(a+b))+(c+(a+(a+b)))))))", (1, 1, R2)),
    ("(((a+b)+(c+(a+b)))+(a+(a+(b+((a+(a+b))+(c+(a+(a+b))))))))", (-1, R2, -1)),
    ("(((a+b)+(c+(a+b)))+(a+(a+(b+(b+((a+(a+b))+(c+(a+(a+b)))))))))", (-1, R2, 1)),
    ("(((a+b)+((a+b)+(c+(a+c))))+(a+(a+(b+((a+(a+b))+(c+(a+(a+b))))))))", (1, R2, -1)),
    ("((a+(a+b))+(((a+b)+(c+(a+b)))+(a+(a+(b+((a+(a+b))+(c+(a+(a+b)))))))))", (-1, 0, 1)),
    ("(((a+b)+((a+b)+(c+(a+c))))+(a+(a+(b+(b+((a+(a+b))+(c+(a+(a+b)))))))))", (1, R2, 1)),
    ("((a+(a+b))+(((a+b)+(c+(a+b)))+(a+(a+(b+(b+((a+(a+b))+(c+(a+(a+b))))))))))", (1, 0, 1)),
)

_TOKEN = re.compile(r"\s*(\(|\)|\+|nor\b|[A-Za-z_]\w*)")


def three_generators() -> Dict[str, Ray]:
    return {"a": Ray((1, 0, 0)), "b": Ray((1, 1, 0)), "c": Ray((R2, 1, 1))}


def _signed_permutations(base: Sequence[object]) -> List[Ray]:
    seen: Dict[Ray, None] = {}
    for perm in permutations(base):
        for signs in product((1, -1), repeat=len(base)):
            seen.setdefault(Ray(Scalar.coerce(x) * s for x, s in zip(perm, signs)), None)
    return list(seen)


def peres_rays() -> List[Ray]:
    """All coordinate permutations and sign changes of (0,0,1), (0,1,1), (0,1,√2), (1,1,√2)."""
    rays = set()
    for base in ((0, 0, 1), (0, 1, 1), (0, 1, R2), (1, 1, R2)):
        rays.update(_signed_permutations(base))
    return sorted(rays)


def seventeen_generators() -> List[Ray]:
    """(0,0,1), (0,1,0) and the permutations of (0,1,√2), (1,1,√2) and (1,-1,√2)."""
    rays: Dict[Ray, None] = {Ray((0, 0, 1)): None, Ray((0, 1, 0)): None}
    for base in ((0, 1, R2), (1, 1, R2), (1, -1, R2)):
        for perm in permutations(base):
            rays.setdefault(Ray(perm), None)
    return list(rays)


def _tokenize(expression: str) -> List[str]:
    tokens, pos = [], 0
    text = expression.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise DerivationError(f"Unexpected character {text[pos]!r}", expression)
        tokens.append(match.group(1))
        pos = match.end()
    return tokens


def evaluate(expression: str, names: Dict[str, Ray]) -> Ray:
    """Evaluate a fully parenthesised nor-expression; "+" and "nor" are synonyms."""
    tokens = _tokenize(expression)
    pos = 0

    def parse() -> Ray:
        nonlocal pos
        if pos >= len(tokens):
            raise DerivationError("Unexpected end of expression", expression)
        token = tokens[pos]
        pos += 1
        if token != "(":
            if token not in names:
                raise DerivationError(f"Unknown operand {token!r}", expression)
            return names[token]
        left = parse()
        if pos >= len(tokens) or tokens[pos] not in ("+", "nor"):
            raise DerivationError("Expected '+' or 'nor'", expression)
        pos += 1
        right = parse()
        if pos >= len(tokens) or tokens[pos] != ")":
            raise DerivationError("Expected ')'", expression)
        pos += 1
        try:
            return nor(left, right)
        except ParallelRaysError as e:
            raise DerivationError("nor applied to parallel rays", expression, details=str(e)) from None

    result = parse()
    if pos != len(tokens):
        raise DerivationError("Trailing tokens after expression", expression)
    return result


def replay_derivation(rows: Iterable[Tuple[str, Sequence[object]]] = DERIVATION) -> List[Ray]:
    """Evaluate every row from the three generators and return generators plus results."""
    rows = list(rows)
    names = three_generators()
    produced: Dict[Ray, None] = {ray: None for ray in names.values()}
    for expression, expected in rows:
        result = evaluate(expression, names)
        if result != Ray(expected):
            raise DerivationError(
                f"Row evaluates to {result}, recorded as {Ray(expected)}", expression
            )
        produced.setdefault(result, None)
    logger.info(f"Replayed {len(rows)} derivation rows into {len(produced)} rays")
    return sorted(produced)


def coordinate_families(rays: Iterable[Ray]) -> Dict[str, int]:
    """Count rays by the sorted absolute values of their canonical coordinates."""
    families: Counter = Counter()
    for ray in rays:
        values = sorted(abs(x) for x in ray.canonical)
        families["(" + ",".join(str(x) for x in values) + ")"] += 1
    return dict(sorted(families.items()))
