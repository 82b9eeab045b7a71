"""
Isomorphism of finite (ortho)lattices up to relabelling.
"""

import logging
from collections import Counter
from typing import Dict, Optional, Tuple

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import DiGraphMatcher

from .ortholattice import BoundedLattice, OrthoLattice


logger = logging.getLogger(__name__)


def signature(lattice: BoundedLattice) -> Tuple:
    """Relabelling-invariant fingerprint: size plus sorted (height, lower covers, upper covers) counts."""
    covers = lattice.cover_matrix
    heights = lattice.heights()
    rows = zip(heights.tolist(), covers.sum(axis=0).tolist(), covers.sum(axis=1).tolist())
    return len(lattice), tuple(sorted(Counter(rows).items()))


def _structure_graph(lattice: BoundedLattice, with_ortho: bool) -> nx.DiGraph:
    graph = nx.DiGraph()
    heights = lattice.heights()
    for i, label in enumerate(lattice.elements):
        graph.add_node(label, height=int(heights[i]))

    kinds: Dict[Tuple[str, str], set] = {}
    for x, y in lattice.covers():
        kinds.setdefault((x, y), set()).add("cover")
    if with_ortho:
        for i, j in enumerate(lattice.ortho_indices):
            kinds.setdefault((lattice.elements[i], lattice.elements[int(j)]), set()).add("ortho")
    for (x, y), kind in kinds.items():
        graph.add_edge(x, y, kinds=tuple(sorted(kind)))
    return graph


def find_isomorphism(l1: BoundedLattice, l2: BoundedLattice) -> Optional[Dict[str, str]]:
    """Label map l1 -> l2 preserving covers (and orthocomplement when both have one), or None."""
    if signature(l1) != signature(l2):
        return None
    with_ortho = isinstance(l1, OrthoLattice) and isinstance(l2, OrthoLattice)
    matcher = DiGraphMatcher(
        _structure_graph(l1, with_ortho),
        _structure_graph(l2, with_ortho),
        node_match=lambda a, b: a["height"] == b["height"],
        edge_match=lambda a, b: a["kinds"] == b["kinds"],
    )
    for mapping in matcher.isomorphisms_iter():
        return dict(mapping)
    return None


def is_isomorphic(l1: BoundedLattice, l2: BoundedLattice) -> bool:
    return find_isomorphism(l1, l2) is not None


def is_order_embedding(source: BoundedLattice, target: BoundedLattice, mapping: Dict[str, str]) -> bool:
    """x <= y iff mapping[x] <= mapping[y] for all x, y of ``source``."""
    idx = np.array([target.index(mapping[x]) for x in source.elements])
    return bool(np.array_equal(source.leq_matrix, target.leq_matrix[np.ix_(idx, idx)]))
