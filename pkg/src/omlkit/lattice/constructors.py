"""
Constructors for the standard finite lattices: Boolean algebras, MO_n,
horizontal sums and direct products.
"""

import logging
from itertools import combinations
from string import ascii_lowercase
from typing import List, Optional, Sequence

import numpy as np

from ..exceptions import ConstructionError
from .ortholattice import BoundedLattice, OrthoLattice


logger = logging.getLogger(__name__)

_MO_LETTERS = "pqrstuvwxyz"
MAX_BOOLEAN_RANK = 16


def _atom_name(i: int, alphabet: str) -> str:
    return alphabet[i] if i < len(alphabet) else f"{alphabet[-1]}{i}"


def boolean(k: int, atoms: Optional[Sequence[str]] = None) -> OrthoLattice:
    """The Boolean algebra 2^k of subsets of k atoms.

    Elements are "0", "1" and subset literals such as "{a,c}", ordered by
    size and then lexicographically.
    """
    if k < 0:
        raise ConstructionError(f"Boolean rank must be non-negative, got {k}", "boolean")
    if k > MAX_BOOLEAN_RANK:
        raise ConstructionError(f"2^{k} is beyond the desk-scale limit 2^{MAX_BOOLEAN_RANK}", "boolean")
    if atoms is None:
        atoms = [_atom_name(i, ascii_lowercase) for i in range(k)]
    elif len(atoms) != k or len(set(atoms)) != k:
        raise ConstructionError("boolean() needs exactly k distinct atom names", "boolean")

    full = (1 << k) - 1
    masks: List[int] = []
    for size in range(k + 1):
        for combo in combinations(range(k), size):
            masks.append(sum(1 << i for i in combo))

    def label(mask: int) -> str:
        if mask == 0:
            return "0"
        if mask == full:
            return "1"
        return "{" + ",".join(atoms[i] for i in range(k) if mask >> i & 1) + "}"

    labels = [label(m) for m in masks]
    position = {m: i for i, m in enumerate(masks)}
    arr = np.array(masks, dtype=np.int64)
    leq = (arr[:, None] & ~arr[None, :]) == 0
    ortho = [position[full ^ m] for m in masks]
    return OrthoLattice(labels, leq, [labels[j] for j in ortho], name=f"2^{k}")


def two_element() -> OrthoLattice:
    """The two-element Boolean algebra {0, 1}."""
    return boolean(1)


def mo(n: int) -> OrthoLattice:
    """MO_n: n complementary atom pairs pasted at 0 and 1 (2n + 2 elements)."""
    if n < 1:
        raise ConstructionError(f"MO_n needs n >= 1, got {n}", "mo")
    labels = ["0"]
    ortho = ["1"]
    for i in range(n):
        letter = _atom_name(i, _MO_LETTERS)
        labels += [f"{letter}-", f"{letter}+"]
        ortho += [f"{letter}+", f"{letter}-"]
    labels.append("1")
    ortho.append("0")

    size = len(labels)
    leq = np.eye(size, dtype=bool)
    leq[0, :] = True
    leq[:, -1] = True
    lattice = OrthoLattice(labels, leq, ortho, name=f"MO_{n}")
    logger.debug(f"Constructed {lattice.name} with {size} elements")
    return lattice


def horizontal_sum(l1: OrthoLattice, l2: OrthoLattice) -> OrthoLattice:
    """Paste two ortholattices together at 0 and 1 only.

    Middle elements keep their labels unless the two sides collide, in which
    case they are prefixed with "1." and "2.".
    """
    for side in (l1, l2):
        if side.zero_index == side.one_index:
            raise ConstructionError("Horizontal sum needs lattices with 0 != 1", "horizontal_sum")

    mid1 = [i for i in range(len(l1)) if i not in (l1.zero_index, l1.one_index)]
    mid2 = [i for i in range(len(l2)) if i not in (l2.zero_index, l2.one_index)]
    names1 = [l1.elements[i] for i in mid1]
    names2 = [l2.elements[i] for i in mid2]
    labels = [l1.zero] + names1 + names2 + [l1.one]
    if len(set(labels)) != len(labels):
        names1 = [f"1.{x}" for x in names1]
        names2 = [f"2.{x}" for x in names2]
        labels = [l1.zero] + names1 + names2 + [l1.one]

    size = len(labels)
    top = size - 1
    map1 = np.empty(len(l1), dtype=np.int64)
    map1[l1.zero_index], map1[l1.one_index] = 0, top
    map1[mid1] = np.arange(1, 1 + len(mid1))
    map2 = np.empty(len(l2), dtype=np.int64)
    map2[l2.zero_index], map2[l2.one_index] = 0, top
    map2[mid2] = np.arange(1 + len(mid1), 1 + len(mid1) + len(mid2))

    leq = np.zeros((size, size), dtype=bool)
    leq[np.ix_(map1, map1)] |= l1.leq_matrix
    leq[np.ix_(map2, map2)] |= l2.leq_matrix

    ortho = np.empty(size, dtype=np.int64)
    ortho[map1] = map1[l1.ortho_indices]
    ortho[map2] = map2[l2.ortho_indices]

    name = f"{l1.name or 'L1'} ⊕ {l2.name or 'L2'}"
    return OrthoLattice(labels, leq, [labels[j] for j in ortho], name=name)


def product(l1: OrthoLattice, l2: OrthoLattice) -> OrthoLattice:
    """Direct product with componentwise order and orthocomplement."""
    n2 = len(l2)
    labels = [f"({x},{y})" for x in l1.elements for y in l2.elements]
    leq = np.kron(l1.leq_matrix.astype(np.int8), l2.leq_matrix.astype(np.int8)).astype(bool)
    ortho = (l1.ortho_indices[:, None] * n2 + l2.ortho_indices[None, :]).ravel()
    name = f"{l1.name or 'L1'} × {l2.name or 'L2'}"
    return OrthoLattice(labels, leq, [labels[j] for j in ortho], name=name)


def subalgebra_family(n: int, m: int) -> OrthoLattice:
    """The finite subalgebra 2^(n-2) × MO_m of the subspace lattice of an n-dimensional space."""
    if n < 2:
        raise ConstructionError(f"Hilbert dimension must be at least 2, got {n}", "subalgebra_family")
    if n == 2:
        return mo(m)
    return product(boolean(n - 2), mo(m))


def benzene_ring() -> OrthoLattice:
    """The six-element ortholattice O_6 (0 < a < b < 1, 0 < b' < a' < 1); not orthomodular."""
    labels = ["0", "a", "b", "b'", "a'", "1"]
    pairs = [("0", "a"), ("a", "b"), ("b", "1"), ("0", "b'"), ("b'", "a'"), ("a'", "1")]
    ortho = {"0": "1", "1": "0", "a": "a'", "a'": "a", "b": "b'", "b'": "b"}
    return OrthoLattice.from_relations(labels, pairs, ortho, name="O_6")


def pentagon() -> BoundedLattice:
    """The non-modular five-element lattice N_5 (0 < a < b < 1, 0 < c < 1)."""
    labels = ["0", "a", "b", "c", "1"]
    pairs = [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]
    return BoundedLattice.from_relations(labels, pairs, name="N_5")
