"""
Kalmbach's construction K(P): one Boolean block per maximal chain of P,
pasted along the elements the chains share.

An element of K(P) is a finite union of half-open intervals
[x₁,x₂) ∪ [x₃,x₄) ∪ ... with x₁ < x₂ < ... a chain of P, stored as the
endpoint tuple (x₁, x₂, ...). Adjacent intervals are merged, so equal
elements coming from different blocks get the same key and are identified.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import ConstructionError, LatticeError, PastingError
from ..lattice.greechie import to_greechie
from ..lattice.laws import LawReport
from ..lattice.ortholattice import NO_BOUND, OrthoLattice, closure_from_relations
from ..states import StateClassification, classify
from .poset import SetElement, SetPoset, maximal_chains, set_label


logger = logging.getLogger(__name__)

IntervalKey = Tuple[SetElement, ...]


@dataclass(frozen=True)
class ChainBlock:
    """The Boolean algebra 2^k generated by a chain c₀ < c₁ < ... < c_k."""

    chain: Tuple[SetElement, ...]

    @property
    def rank(self) -> int:
        return len(self.chain) - 1

    @property
    def size(self) -> int:
        return 2 ** self.rank

    def atoms(self) -> List[IntervalKey]:
        """[c_{i-1}, c_i) for i = 1..k."""
        return [(self.chain[i - 1], self.chain[i]) for i in range(1, len(self.chain))]

    def differences(self) -> List[FrozenSet[str]]:
        """The relative complements c_i ∖ c_{i-1}; they partition c_k ∖ c₀."""
        return [self.chain[i] - self.chain[i - 1] for i in range(1, len(self.chain))]

    def element(self, mask: int) -> IntervalKey:
        """Merged interval key of the union of the atoms selected by ``mask``."""
        key: List[SetElement] = []
        for i in range(1, len(self.chain)):
            if not mask >> (i - 1) & 1:
                continue
            if key and key[-1] == self.chain[i - 1]:
                key[-1] = self.chain[i]
            else:
                key.extend((self.chain[i - 1], self.chain[i]))
        return tuple(key)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "chain": [set_label(c) for c in self.chain],
            "atoms": [interval_label(a, self.chain[0], self.chain[-1]) for a in self.atoms()],
            "differences": [set_label(d) for d in self.differences()],
        }


def chain_block(chain: Sequence[Any]) -> ChainBlock:
    sets = tuple(frozenset(c) for c in chain)
    if not sets:
        raise ConstructionError("Empty chain", "chain_block")
    for lower, upper in zip(sets, sets[1:]):
        if not lower < upper:
            raise ConstructionError(
                f"Chain is not strictly increasing at {set_label(lower)} → {set_label(upper)}",
                "chain_block",
            )
    return ChainBlock(sets)


def interval_label(key: IntervalKey, bottom: SetElement, top: SetElement) -> str:
    if not key:
        return "0"
    if key == (bottom, top):
        return "1"
    return "∪".join(f"[{set_label(key[i])},{set_label(key[i + 1])})" for i in range(0, len(key), 2))


@dataclass
class EmbeddingMap:
    """φ : P → K(P), keyed by set labels."""

    source: SetPoset
    target: OrthoLattice
    mapping: Dict[str, str] = field(default_factory=dict)
    blocks: List[ChainBlock] = field(default_factory=list)

    def __call__(self, label: str) -> str:
        return self.mapping[label]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mapping": dict(self.mapping),
            "blocks": [b.to_dict() for b in self.blocks],
        }


def _element_sort_key(key: IntervalKey, bottom: SetElement, top: SetElement) -> Tuple:
    kind = 0 if not key else 2 if key == (bottom, top) else 1
    return kind, len(key), [(len(e), sorted(e)) for e in key]


def kalmbach_embedding(poset: SetPoset) -> Tuple[OrthoLattice, EmbeddingMap]:
    """Paste the blocks of all maximal chains and return K(P) with φ."""
    if len(poset) < 2:
        raise ConstructionError("The poset needs distinct bottom and top", "kalmbach_embedding")
    bottom, top = poset.bottom, poset.top
    blocks = [chain_block(c) for c in maximal_chains(poset)]

    block_keys: List[List[IntervalKey]] = []
    found = set()
    for block in blocks:
        keys = [block.element(mask) for mask in range(block.size)]
        block_keys.append(keys)
        found.update(keys)
    ordered = sorted(found, key=lambda k: _element_sort_key(k, bottom, top))
    labels = [interval_label(k, bottom, top) for k in ordered]
    position = {k: i for i, k in enumerate(ordered)}

    ortho: Dict[str, str] = {}
    pairs = []
    for block, keys in zip(blocks, block_keys):
        full = block.size - 1
        masks = np.arange(block.size)
        subset = (masks[:, None] & ~masks[None, :]) == 0
        for i, j in np.argwhere(subset):
            pairs.append((labels[position[keys[i]]], labels[position[keys[j]]]))
        for mask, key in enumerate(keys):
            label, complement = labels[position[key]], labels[position[keys[full ^ mask]]]
            if ortho.setdefault(label, complement) != complement:
                raise PastingError(
                    f"Blocks disagree on the complement of {label}",
                    (label, ortho[label], complement),
                )

    try:
        leq = closure_from_relations(labels, pairs)
        lattice = OrthoLattice(labels, leq, ortho, name="kalmbach")
    except (ConstructionError, LatticeError) as e:
        raise PastingError(f"Pasting of {len(blocks)} chain blocks failed: {e.message}") from e

    mapping = {}
    for x in poset.elements:
        key = () if x == bottom else (bottom, x)
        mapping[set_label(x)] = labels[position[key]]
    logger.info(f"K(P) for {len(poset)} poset elements: {len(blocks)} block(s), {len(lattice)} elements")
    return lattice, EmbeddingMap(poset, lattice, mapping, blocks)


@dataclass
class EmbeddingReport:
    checks: List[LawReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks)

    def failures(self) -> List[LawReport]:
        return [c for c in self.checks if not c]

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def _first(problem: Optional[Tuple[str, ...]], name: str, statement: str,
           lhs: Optional[str] = None, rhs: Optional[str] = None) -> LawReport:
    if problem is None:
        return LawReport(name, True, statement=statement)
    return LawReport(name, False, witness=problem, lhs=lhs, rhs=rhs, statement=statement)


def verify_embedding(m: EmbeddingMap) -> EmbeddingReport:
    """Exhaustively check injectivity, (i) order, (ii) meets, (iii) joins and chains-in-blocks."""
    source = m.source.to_lattice(require_lattice=False)
    target = m.target
    labels = source.elements
    image = [target.index(m.mapping[x]) for x in labels]
    report = EmbeddingReport()

    seen: Dict[int, str] = {}
    clash = None
    for x, k in zip(labels, image):
        if k in seen:
            clash = (seen[k], x)
            break
        seen[k] = x
    report.checks.append(_first(clash, "injective", "φ(x) = φ(y) ⇒ x = y"))

    tleq = target.leq_matrix
    sleq = source.leq_matrix
    n = len(labels)
    order_hit = meet_hit = join_hit = None
    for i in range(n):
        for j in range(n):
            if order_hit is None and bool(sleq[i, j]) != bool(tleq[image[i], image[j]]):
                order_hit = ((labels[i], labels[j]), str(bool(sleq[i, j])), str(bool(tleq[image[i], image[j]])))
            k = int(source.meet_table[i, j])
            if meet_hit is None and k != NO_BOUND and image[k] != target.meet_table[image[i], image[j]]:
                meet_hit = ((labels[i], labels[j]), m.mapping[labels[k]],
                            target.elements[target.meet_table[image[i], image[j]]])
            k = int(source.join_table[i, j])
            if join_hit is None and k != NO_BOUND and image[k] != target.join_table[image[i], image[j]]:
                join_hit = ((labels[i], labels[j]), m.mapping[labels[k]],
                            target.elements[target.join_table[image[i], image[j]]])

    for name, statement, hit in (
        ("order", "x ≤ y ⇔ φ(x) ≤ φ(y)", order_hit),
        ("meets", "φ(x ∧ y) = φ(x) ∧ φ(y) whenever x ∧ y exists", meet_hit),
        ("joins", "φ(x ∨ y) = φ(x) ∨ φ(y) whenever x ∨ y exists", join_hit),
    ):
        if hit is None:
            report.checks.append(_first(None, name, statement))
        else:
            witness, lhs, rhs = hit
            report.checks.append(_first(witness, name, statement, lhs, rhs))

    chain_hit = None
    for chain in maximal_chains(m.source):
        idx = [target.index(m.mapping[set_label(c)]) for c in chain]
        for a in idx:
            for b in idx:
                if not (tleq[a, b] or tleq[b, a]):
                    chain_hit = (target.elements[a], target.elements[b])
                    break
            if chain_hit:
                break
        if chain_hit:
            break
    report.checks.append(_first(chain_hit, "chains", "every chain of P lands in one Boolean block"))

    logger.debug(f"Embedding checks: {[(c.law, c.holds) for c in report.checks]}")
    return report


def state_classification(lattice: OrthoLattice) -> StateClassification:
    """Two-valued states of a pasted lattice, read off its Greechie diagram."""
    if len(lattice) <= 2:
        return StateClassification(1, True, True, True)
    plain = lattice.relabel({x: f"e{i}" for i, x in enumerate(lattice.elements)})
    return classify(to_greechie(plain))


def full_state_check(lattice: OrthoLattice) -> bool:
    """Whether the two-valued states are separating and unital."""
    return state_classification(lattice).full
