"""
Greechie diagrams: atoms plus contexts (maximal Boolean blocks), their text
format, pasting into an orthoposet and re-extraction from a lattice.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from networkx.utils import UnionFind

from ..exceptions import ConstructionError, DiagramError, ParseError, PastingError
from .ortholattice import OrthoLattice, closure_from_relations


logger = logging.getLogger(__name__)

MAX_CONTEXT_SIZE = 16
_RESERVED = {"0", "1"}


@dataclass(frozen=True)
class GreechieDiagram:
    """Hypergraph of atoms and contexts; each context is a maximal Boolean block."""

    atoms: Tuple[str, ...]
    contexts: Tuple[Tuple[str, ...], ...]

    def __post_init__(self):
        if len(set(self.atoms)) != len(self.atoms):
            raise DiagramError("Atom names must be distinct")
        for atom in self.atoms:
            if not atom or atom != atom.strip() or any(ch in atom for ch in ",#\n") or atom in _RESERVED:
                raise DiagramError(f"Invalid atom name {atom!r}")

        known = set(self.atoms)
        used = set()
        sets = []
        for context in self.contexts:
            if len(context) < 2 or len(set(context)) != len(context):
                raise DiagramError("Every context needs at least two distinct atoms", context)
            unknown = [a for a in context if a not in known]
            if unknown:
                raise DiagramError(f"Context mentions unknown atom {unknown[0]!r}", context)
            used.update(context)
            sets.append(frozenset(context))

        for i, first in enumerate(sets):
            for j, second in enumerate(sets):
                if i != j and first <= second:
                    raise DiagramError("A context is contained in another context", self.contexts[i])

        unused = [a for a in self.atoms if a not in used]
        if unused:
            raise DiagramError(f"Atom {unused[0]!r} belongs to no context")

    @classmethod
    def from_contexts(cls, contexts: Iterable[Sequence[str]]) -> "GreechieDiagram":
        """Build a diagram whose atoms are listed in order of first appearance."""
        contexts = tuple(tuple(c) for c in contexts)
        atoms: Dict[str, None] = {}
        for context in contexts:
            for atom in context:
                atoms.setdefault(atom, None)
        return cls(tuple(atoms), contexts)

    def context_sets(self) -> FrozenSet[FrozenSet[str]]:
        return frozenset(frozenset(c) for c in self.contexts)

    def neighbours(self) -> Dict[str, FrozenSet[str]]:
        """Atoms sharing at least one context with each atom."""
        result: Dict[str, set] = {a: set() for a in self.atoms}
        for context in self.contexts:
            for atom in context:
                result[atom].update(context)
        return {a: frozenset(n - {a}) for a, n in result.items()}

    def relabel(self, mapping: Dict[str, str]) -> "GreechieDiagram":
        return GreechieDiagram(
            tuple(mapping.get(a, a) for a in self.atoms),
            tuple(tuple(mapping.get(a, a) for a in c) for c in self.contexts),
        )

    def to_dict(self) -> Dict[str, object]:
        return {"atoms": list(self.atoms), "contexts": [list(c) for c in self.contexts]}


def parse_greechie(text: str, source: str = "<string>") -> GreechieDiagram:
    """Parse the text format: one context per line, comma-separated atom names, # comments."""
    contexts = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        names = [name.strip() for name in line.split(",")]
        if any(not name for name in names):
            raise ParseError("Empty atom name in context", source, lineno)
        contexts.append(names)
    if not contexts:
        raise ParseError("Diagram has no contexts", source)
    return GreechieDiagram.from_contexts(contexts)


def emit_greechie(diagram: GreechieDiagram) -> str:
    return "".join(",".join(context) + "\n" for context in diagram.contexts)


# -- pasting -----------------------------------------------------------------

def _masks_by_size(k: int) -> List[int]:
    masks = []
    for size in range(k + 1):
        for combo in combinations(range(k), size):
            masks.append(sum(1 << i for i in combo))
    return masks


def _subset_keys(block: int, context: Sequence[str], mask: int) -> List[Hashable]:
    """Names under which a block subset may be shared with other blocks."""
    k = len(context)
    full = (1 << k) - 1
    members = [context[i] for i in range(k) if mask >> i & 1]
    if mask == 0:
        return [("bottom",)]
    if mask == full:
        return [("top",)]
    keys: List[Hashable] = []
    if len(members) == 1:
        keys.append(("atom", members[0]))
    if len(members) == k - 1:
        missing = next(context[i] for i in range(k) if not mask >> i & 1)
        keys.append(("co", missing))
    if not keys:
        keys.append(("block", block, mask))
    return keys


def _check_shared_atoms(diagram: GreechieDiagram) -> None:
    sets = [frozenset(c) for c in diagram.contexts]
    for i, j in combinations(range(len(sets)), 2):
        shared = sets[i] & sets[j]
        if len(shared) > 1:
            raise PastingError(
                "Contexts sharing more than one atom cannot be pasted",
                sorted(shared),
                details=f"contexts {i + 1} and {j + 1}",
            )


def from_greechie(diagram: GreechieDiagram, require_lattice: bool = True) -> OrthoLattice:
    """Paste one Boolean block per context, identifying 0, 1, shared atoms and their complements.

    Elements are listed as 0, the atoms, the remaining block elements in block
    order, then 1.

    Raises:
        PastingError: blocks share more than one atom, a block collapses, two
            atoms are identified or one stops covering 0, the orthocomplement
            is ambiguous, or the pasted order has a cycle.
        LatticeError: ``require_lattice`` is set and some meet or join is missing.
    """
    _check_shared_atoms(diagram)
    for context in diagram.contexts:
        if len(context) > MAX_CONTEXT_SIZE:
            raise PastingError(f"Context of size {len(context)} exceeds {MAX_CONTEXT_SIZE}", context)

    uf = UnionFind()
    all_keys: List[Hashable] = []
    blocks: List[List[Tuple[int, Hashable]]] = []
    for b, context in enumerate(diagram.contexts):
        entries = []
        for mask in _masks_by_size(len(context)):
            keys = _subset_keys(b, context, mask)
            uf.union(*keys)
            all_keys.extend(keys)
            entries.append((mask, keys[0]))
        blocks.append(entries)
    for atom in diagram.atoms:
        uf.union(("atom", atom))

    for b, entries in enumerate(blocks):
        roots = {uf[key] for _, key in entries}
        if len(roots) != len(entries):
            raise PastingError("Block collapses under identification", diagram.contexts[b])

    owner: Dict[Hashable, str] = {}
    for atom in diagram.atoms:
        other = owner.setdefault(uf[("atom", atom)], atom)
        if other != atom:
            raise PastingError("Pasting identifies distinct atoms", (other, atom))

    # Element order: 0, atoms, other block elements, 1.
    bottom, top = uf[("bottom",)], uf[("top",)]
    placed: Dict[Hashable, int] = {bottom: 0}
    ordering = [("atom", a) for a in diagram.atoms] + [key for entries in blocks for _, key in entries]
    for key in ordering:
        root = uf[key]
        if root not in placed and root != top:
            placed[root] = len(placed)
    placed[top] = len(placed)

    labels = _class_labels(uf, all_keys, placed, diagram)
    if len(set(labels)) != len(labels):
        raise PastingError("Pasted element labels collide; rename atoms ending in a prime")

    ortho: Dict[int, int] = {}
    pairs = []
    for b, entries in enumerate(blocks):
        full = (1 << len(diagram.contexts[b])) - 1
        cls_of = {mask: placed[uf[key]] for mask, key in entries}
        for mask, idx in cls_of.items():
            image = cls_of[full ^ mask]
            if ortho.setdefault(idx, image) != image:
                raise PastingError(
                    "Orthocomplement is not well defined after pasting",
                    (labels[idx], labels[ortho[idx]], labels[image]),
                )
            for bit in range(len(diagram.contexts[b])):
                if not mask >> bit & 1:
                    pairs.append((labels[idx], labels[cls_of[mask | 1 << bit]]))

    try:
        leq = closure_from_relations(labels, pairs)
    except ConstructionError as e:
        raise PastingError("Pasted order has a cycle", details=e.details) from None

    # every diagram atom must still cover 0
    for atom in diagram.atoms:
        idx = placed[uf[("atom", atom)]]
        below = [labels[j] for j in np.flatnonzero(leq[:, idx]) if j not in (0, idx)]
        if below:
            raise PastingError(
                f"Atom {atom!r} is no longer an atom after pasting; some context is not a maximal block",
                (atom, *below),
            )

    lattice = OrthoLattice(
        labels,
        leq,
        [labels[ortho[i]] for i in range(len(labels))],
        name="pasting",
        require_lattice=require_lattice,
    )
    logger.info(f"Pasted {len(diagram.contexts)} block(s) into {len(lattice)} elements")
    return lattice


def _class_labels(uf: UnionFind, keys: List[Hashable], placed: Dict[Hashable, int],
                  diagram: GreechieDiagram) -> List[str]:
    rank = {"bottom": 0, "top": 0, "atom": 1, "co": 2, "block": 3}
    best: Dict[Hashable, Hashable] = {}
    for key in keys:
        root = uf[key]
        current = best.get(root)
        if current is None or rank[key[0]] < rank[current[0]]:
            best[root] = key

    labels = [""] * len(placed)
    for root, idx in placed.items():
        key = best[root]
        kind = key[0]
        if kind == "bottom":
            labels[idx] = "0"
        elif kind == "top":
            labels[idx] = "1"
        elif kind == "atom":
            labels[idx] = key[1]
        elif kind == "co":
            labels[idx] = f"{key[1]}'"
        else:
            context = diagram.contexts[key[1]]
            labels[idx] = "{" + ",".join(context[i] for i in range(len(context)) if key[2] >> i & 1) + "}"
    return labels


# -- re-extraction -----------------------------------------------------------

def to_greechie(lattice: OrthoLattice) -> GreechieDiagram:
    """Recover atoms (covers of 0) and contexts (maximal orthogonal atom sets)."""
    atoms = lattice.atoms()
    position = {a: i for i, a in enumerate(atoms)}
    graph = nx.Graph()
    graph.add_nodes_from(atoms)
    for x, y in combinations(atoms, 2):
        if lattice.is_orthogonal(x, y):
            graph.add_edge(x, y)

    contexts = []
    for clique in nx.find_cliques(graph):
        ordered = tuple(sorted(clique, key=position.__getitem__))
        if len(ordered) < 2:
            raise DiagramError("Atom is orthogonal to no other atom", ordered)
        contexts.append(ordered)
    contexts.sort(key=lambda c: [position[a] for a in c])
    return GreechieDiagram(tuple(atoms), tuple(contexts))


def same_diagram(d1: GreechieDiagram, d2: GreechieDiagram, mapping: Optional[Dict[str, str]] = None) -> bool:
    """Equal as hypergraphs, after renaming d1's atoms through ``mapping``."""
    if mapping:
        d1 = d1.relabel(mapping)
    return set(d1.atoms) == set(d2.atoms) and d1.context_sets() == d2.context_sets()
