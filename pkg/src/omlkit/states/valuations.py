"""
Two-valued states (valuations) on Greechie diagrams.

A state assigns 0 or 1 to every atom so that each context has exactly one
true atom. Enumeration is a binary backtracking search with unit propagation:
a true atom forces its context neighbours false, and a context whose other
atoms are all false forces its last atom true.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..config import get_settings
from ..exceptions import SizeLimitError, UnknownAtomError
from ..lattice.greechie import GreechieDiagram


logger = logging.getLogger(__name__)

UNSET = -1


@dataclass(frozen=True)
class TwoValuedState:
    """A 0/1 assignment over the atoms of one diagram, in diagram atom order."""

    atoms: Tuple[str, ...]
    bits: Tuple[int, ...]

    @property
    def values(self) -> Dict[str, int]:
        return dict(zip(self.atoms, self.bits))

    def __getitem__(self, atom: str) -> int:
        try:
            return self.bits[self.atoms.index(atom)]
        except ValueError:
            raise UnknownAtomError(f"Unknown atom {atom!r}", atom) from None

    def true_atoms(self) -> List[str]:
        return [a for a, bit in zip(self.atoms, self.bits) if bit]

    def to_dict(self) -> Dict[str, int]:
        return self.values


@dataclass
class StateClassification:
    """Summary of the state space of a diagram."""

    count: int
    unital: bool
    separating: bool
    full: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "count": self.count,
            "unital": self.unital,
            "separating": self.separating,
            "full": self.full,
        }


class _Search:
    """Index-based view of a diagram for the backtracking search."""

    def __init__(self, diagram: GreechieDiagram):
        self.diagram = diagram
        self.position = {a: i for i, a in enumerate(diagram.atoms)}
        self.contexts = [[self.position[a] for a in c] for c in diagram.contexts]
        self.atom_contexts: List[List[int]] = [[] for _ in diagram.atoms]
        for c, members in enumerate(self.contexts):
            for i in members:
                self.atom_contexts[i].append(c)
        neighbours = diagram.neighbours()
        self.neighbours = [sorted(self.position[b] for b in neighbours[a]) for a in diagram.atoms]
        self.nodes = 0

    def propagate(self, values: List[int], pending: List[Tuple[int, int]]) -> bool:
        """Apply forced assignments; False on conflict."""
        while pending:
            i, v = pending.pop()
            if values[i] == v:
                continue
            if values[i] != UNSET:
                return False
            values[i] = v
            if v == 1:
                pending.extend((j, 0) for j in self.neighbours[i])
            for c in self.atom_contexts[i]:
                members = self.contexts[c]
                ones = sum(1 for k in members if values[k] == 1)
                if ones > 1:
                    return False
                if ones == 0:
                    open_atoms = [k for k in members if values[k] == UNSET]
                    if not open_atoms:
                        return False
                    if len(open_atoms) == 1:
                        pending.append((open_atoms[0], 1))
        return True

    def branch_atom(self, values: List[int]) -> Optional[int]:
        """First open atom of the most constrained context without a true atom."""
        best: Optional[Tuple[int, int]] = None
        for members in self.contexts:
            if any(values[k] == 1 for k in members):
                continue
            open_atoms = [k for k in members if values[k] == UNSET]
            if best is None or len(open_atoms) < best[0]:
                best = (len(open_atoms), min(open_atoms))
        return None if best is None else best[1]

    def run(self, seeds: Sequence[Tuple[int, int]] = ()) -> List[Tuple[int, ...]]:
        found: List[Tuple[int, ...]] = []
        values = [UNSET] * len(self.position)
        if not self.propagate(values, list(seeds)):
            return found
        stack = [values]
        while stack:
            values = stack.pop()
            self.nodes += 1
            atom = self.branch_atom(values)
            if atom is None:
                found.append(tuple(values))
                continue
            # pushed in reverse so that value 1 is explored first
            for v in (0, 1):
                child = list(values)
                if self.propagate(child, [(atom, v)]):
                    stack.append(child)
        return found


def _finish(diagram: GreechieDiagram, rows: List[Tuple[int, ...]]) -> List[TwoValuedState]:
    states = [TwoValuedState(diagram.atoms, row) for row in sorted(set(rows), reverse=True)]
    for state in states:
        if not is_admissible(diagram, state.values):
            raise AssertionError(f"search produced an inadmissible state {state.true_atoms()}")
    return states


def enumerate_states(diagram: GreechieDiagram) -> List[TwoValuedState]:
    """All two-valued states, sorted by bit vector in descending order."""
    search = _Search(diagram)
    states = _finish(diagram, search.run())
    logger.info(
        f"Enumerated {len(states)} two-valued state(s) on {len(diagram.atoms)} atoms "
        f"({search.nodes} search nodes)"
    )
    return states


def symmetric_seed(diagram: GreechieDiagram, atom: str) -> List[TwoValuedState]:
    """All states in which ``atom`` is true."""
    search = _Search(diagram)
    if atom not in search.position:
        raise UnknownAtomError(f"Unknown atom {atom!r}", atom)
    return _finish(diagram, search.run([(search.position[atom], 1)]))


def enumerate_states_brute_force(diagram: GreechieDiagram, limit: Optional[int] = None) -> List[TwoValuedState]:
    """Reference enumeration over all 2^n assignments."""
    if limit is None:
        limit = get_settings().states.brute_force_limit
    n = len(diagram.atoms)
    if n > limit:
        raise SizeLimitError(f"Brute force over 2^{n} assignments exceeds the limit 2^{limit}", size=n, limit=limit)
    rows = [bits for bits in product((0, 1), repeat=n) if is_admissible(diagram, dict(zip(diagram.atoms, bits)))]
    return [TwoValuedState(diagram.atoms, row) for row in sorted(rows, reverse=True)]


def is_admissible(diagram: GreechieDiagram, values: Mapping[str, int]) -> bool:
    """Every atom valued 0 or 1 and exactly one true atom per context."""
    if set(values) != set(diagram.atoms) or any(v not in (0, 1) for v in values.values()):
        return False
    return all(sum(values[a] for a in context) == 1 for context in diagram.contexts)


def classify(diagram: GreechieDiagram, states: Optional[List[TwoValuedState]] = None) -> StateClassification:
    """Count the states and decide unital, separating and full (separating and unital)."""
    if states is None:
        states = enumerate_states(diagram)
    n = len(diagram.atoms)
    matrix = np.array([s.bits for s in states], dtype=np.int8).reshape(len(states), n)
    unital = bool(n == 0 or matrix.any(axis=0).all())
    if not states:
        separating = n < 2
    else:
        # distinct columns: every atom pair is told apart by some state
        separating = bool(len(np.unique(matrix.T, axis=0)) == n)
    return StateClassification(len(states), unital, separating, separating and unital)


def states_to_list(states: Sequence[TwoValuedState]) -> List[Dict[str, int]]:
    return [s.to_dict() for s in states]
