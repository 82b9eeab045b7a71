"""
Bounded posets whose elements are finite sets ordered by inclusion.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np

from ..exceptions import ConstructionError, ParseError
from ..lattice.ortholattice import BoundedLattice


logger = logging.getLogger(__name__)

SetElement = FrozenSet[str]

_FORBIDDEN = set(",{}[)∪")


def set_label(s: Iterable[str]) -> str:
    """`{a,b}` with members sorted; `{}` for the empty set."""
    return "{" + ",".join(sorted(s)) + "}"


def _sort_key(s: SetElement) -> Tuple[int, List[str]]:
    return len(s), sorted(s)


@dataclass(frozen=True)
class SetPoset:
    """Distinct sets including ∅ and the union of all of them, ordered by ⊆."""

    elements: Tuple[SetElement, ...]

    def __post_init__(self):
        elements = tuple(sorted({frozenset(e) for e in self.elements}, key=_sort_key))
        if len(elements) != len(self.elements):
            raise ConstructionError("Poset elements must be distinct sets", "SetPoset")
        for e in elements:
            bad = [m for m in e if not m or set(m) & _FORBIDDEN or m != m.strip()]
            if bad:
                raise ConstructionError(f"Invalid member name {bad[0]!r}", "SetPoset")
        if frozenset() not in elements:
            raise ConstructionError("Poset needs the empty set as bottom", "SetPoset")
        top = frozenset().union(*elements)
        if top not in elements:
            raise ConstructionError(f"Poset needs {set_label(top)} as top", "SetPoset")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[str]]) -> "SetPoset":
        return cls(tuple(frozenset(s) for s in sets))

    @property
    def bottom(self) -> SetElement:
        return self.elements[0]

    @property
    def top(self) -> SetElement:
        return self.elements[-1]

    def __len__(self) -> int:
        return len(self.elements)

    def labels(self) -> List[str]:
        return [set_label(e) for e in self.elements]

    def leq_matrix(self) -> np.ndarray:
        return np.array([[x <= y for y in self.elements] for x in self.elements], dtype=bool)

    def cover_graph(self) -> nx.DiGraph:
        """Edges x → y for every cover x ⋖ y."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.elements)
        for x in self.elements:
            above = [y for y in self.elements if x < y]
            for y in above:
                if not any(x < z < y for z in above):
                    graph.add_edge(x, y)
        return graph

    def to_lattice(self, require_lattice: bool = True) -> BoundedLattice:
        """The poset as a bounded lattice over its set labels."""
        return BoundedLattice(self.labels(), self.leq_matrix(), name="poset", require_lattice=require_lattice)

    def to_dict(self) -> Dict[str, object]:
        return {"elements": self.labels()}


def maximal_chains(poset: SetPoset) -> List[Tuple[SetElement, ...]]:
    """All maximal chains from ∅ to the top, ordered by their element labels."""
    graph = poset.cover_graph()
    if poset.bottom == poset.top:
        return [(poset.bottom,)]
    chains = [tuple(path) for path in nx.all_simple_paths(graph, poset.bottom, poset.top)]
    chains.sort(key=lambda c: [_sort_key(e) for e in c])
    logger.debug(f"{len(chains)} maximal chain(s) in a poset of {len(poset)} elements")
    return chains


def parse_set(token: str, source: str = "<poset>", line: Optional[int] = None) -> SetElement:
    text = token.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ParseError(f"Expected a set literal like {{a,b}}, got '{text}'", source, line)
    inner = text[1:-1].strip()
    if not inner:
        return frozenset()
    members = [m.strip() for m in inner.split(",")]
    if any(not m for m in members):
        raise ParseError(f"Empty member in '{text}'", source, line)
    return frozenset(members)


def parse_poset(text: str, source: str = "<poset>") -> SetPoset:
    """One set literal per line; `{}` is the bottom, `#` starts a comment."""
    sets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            sets.append(parse_set(line, source, lineno))
    if not sets:
        raise ParseError("No poset elements found", source)
    try:
        return SetPoset(tuple(sets))
    except ConstructionError as e:
        raise ParseError(e.message, source) from None


def emit_poset(poset: SetPoset) -> str:
    return "".join(label + "\n" for label in poset.labels())
