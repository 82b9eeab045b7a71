"""
Event schemes: which single and joint probabilities span a correlation polytope.
"""

import logging
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..config import get_settings
from ..exceptions import ParseError, SchemeError, SizeLimitError


logger = logging.getLogger(__name__)

Term = Tuple[int, ...]


@dataclass(frozen=True)
class EventScheme:
    """n events and the ordered list of terms p_i, p_ij, ... that form a probability vector."""

    n: int
    terms: Tuple[Term, ...]

    def __post_init__(self):
        if self.n < 1:
            raise SchemeError(f"A scheme needs at least one event, got n={self.n}")
        terms = tuple(tuple(sorted(t)) for t in self.terms)
        if not terms:
            raise SchemeError("A scheme needs at least one term")
        seen = set()
        joint_started = False
        for term in terms:
            if not term:
                raise SchemeError("Empty term")
            if len(set(term)) != len(term):
                raise SchemeError(f"Term {list(term)} repeats an event")
            if term[0] < 1 or term[-1] > self.n:
                raise SchemeError(f"Term {list(term)} uses an event outside 1..{self.n}")
            if term in seen:
                raise SchemeError(f"Duplicate term {list(term)}")
            if len(term) == 1 and joint_started:
                raise SchemeError(f"Single-event term {list(term)} listed after a joint term")
            joint_started = joint_started or len(term) > 1
            seen.add(term)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def boolean(cls, n: int, joints: Iterable[Sequence[int]] = ()) -> "EventScheme":
        """All n singletons followed by the given joint terms."""
        return cls(n, tuple((i,) for i in range(1, n + 1)) + tuple(tuple(j) for j in joints))

    @classmethod
    def clauser_horne(cls) -> "EventScheme":
        """Events 1, 2 on one side and 3, 4 on the other; joints p13, p14, p23, p24."""
        return cls.boolean(4, [(1, 3), (1, 4), (2, 3), (2, 4)])

    @property
    def dimension(self) -> int:
        return len(self.terms)

    def term_name(self, term: Term) -> str:
        sep = "_" if self.n >= 10 else ""
        return "p" + sep.join(str(i) for i in term)

    def term_names(self) -> List[str]:
        return [self.term_name(t) for t in self.terms]

    def evaluate(self, assignment: Sequence[int]) -> Tuple[int, ...]:
        """The vertex of a truth assignment t ∈ {0,1}ⁿ: products of the t_i in each term."""
        if len(assignment) != self.n:
            raise SchemeError(f"Assignment has {len(assignment)} values, expected {self.n}")
        return tuple(int(all(assignment[i - 1] for i in term)) for term in self.terms)

    def vertices(self, max_events: Optional[int] = None) -> List[Tuple[int, ...]]:
        limit = get_settings().polytope.max_events if max_events is None else max_events
        if self.n > limit:
            raise SizeLimitError(f"Vertex enumeration over 2^{self.n} assignments", self.n, limit)
        found = {self.evaluate(t) for t in cartesian((0, 1), repeat=self.n)}
        result = sorted(found)
        logger.debug(f"Scheme n={self.n} with {self.dimension} terms: {len(result)} vertices")
        return result

    def permuted(self, permutation: Dict[int, int]) -> "EventScheme":
        """Relabel events; the term order follows the relabelled terms' original positions."""
        return EventScheme(self.n, tuple(tuple(sorted(permutation[i] for i in t)) for t in self.terms))

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "terms": [list(t) for t in self.terms], "names": self.term_names()}


def vertices(scheme: EventScheme, max_events: Optional[int] = None) -> List[Tuple[int, ...]]:
    """The 0/1 vertices of the scheme's correlation polytope, duplicates removed, sorted."""
    return scheme.vertices(max_events)


def parse_scheme(text: str, source: str = "<scheme>") -> EventScheme:
    """First non-comment line is n; each further line is one term's event indices.

    With no term lines the scheme is the n singletons.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise ParseError("Empty scheme file", source)

    first_line, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"Expected the number of events, got '{head}'", source, first_line) from None

    terms = []
    for lineno, line in lines[1:]:
        try:
            terms.append(tuple(int(tok) for tok in line.replace(",", " ").split()))
        except ValueError:
            raise ParseError(f"Bad term '{line}'", source, lineno) from None
    try:
        return EventScheme(n, tuple(terms)) if terms else EventScheme.boolean(n)
    except SchemeError as e:
        raise ParseError(e.message, source) from None


def emit_scheme(scheme: EventScheme) -> str:
    lines = [str(scheme.n)]
    lines.extend(" ".join(str(i) for i in term) for term in scheme.terms)
    return "\n".join(lines) + "\n"
