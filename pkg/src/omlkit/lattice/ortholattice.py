"""
Finite bounded lattices and ortholattices over labelled elements.

The order is stored as a boolean numpy matrix ``leq[i, j] == (e_i <= e_j)``;
meet and join tables are derived from it once and reused by every law scan.
"""

import logging
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from ..exceptions import ConstructionError, LatticeError, UnknownAtomError


logger = logging.getLogger(__name__)

# Marker for a missing meet/join in the operation tables.
NO_BOUND = -1


def closure_from_relations(elements: Sequence[str], pairs: Iterable[Tuple[str, str]]) -> np.ndarray:
    """Reflexive-transitive closure of ``x <= y`` pairs as a boolean matrix.

    Raises:
        ConstructionError: unknown labels, or a cycle between distinct elements.
    """
    index = {label: i for i, label in enumerate(elements)}
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(elements)))
    for x, y in pairs:
        if x not in index or y not in index:
            missing = x if x not in index else y
            raise ConstructionError(f"Relation mentions unknown element {missing!r}", "from_relations")
        graph.add_edge(index[x], index[y])

    for component in nx.strongly_connected_components(graph):
        if len(component) > 1:
            labels = sorted(elements[i] for i in component)
            raise ConstructionError(
                "Order relation is not antisymmetric", "from_relations", details=", ".join(labels)
            )

    closure = nx.transitive_closure(graph, reflexive=True)
    leq = np.zeros((len(elements), len(elements)), dtype=bool)
    for i, j in closure.edges:
        leq[i, j] = True
    return leq


class BoundedLattice:
    """A finite bounded poset, normally a lattice.

    Elements are opaque string labels kept in construction order; that order
    is the canonical order used for witnesses and output.
    """

    def __init__(
        self,
        elements: Sequence[str],
        leq: np.ndarray,
        name: Optional[str] = None,
        require_lattice: bool = True,
    ):
        self._elements: Tuple[str, ...] = tuple(elements)
        self._index: Dict[str, int] = {label: i for i, label in enumerate(self._elements)}
        if len(self._index) != len(self._elements):
            raise ConstructionError("Element labels must be distinct", type(self).__name__)

        leq = np.array(leq, dtype=bool)
        leq.setflags(write=False)
        self._leq = leq
        self.name = name

        self._check_order()
        self._zero = self._find_bound(leq.all(axis=1), "bottom")
        self._one = self._find_bound(leq.all(axis=0), "top")

        if require_lattice and not self.is_lattice:
            pair = self.first_missing_bound()
            raise LatticeError("Order is not a lattice: meet or join missing", pair)

    @classmethod
    def from_relations(
        cls,
        elements: Sequence[str],
        pairs: Iterable[Tuple[str, str]],
        name: Optional[str] = None,
        require_lattice: bool = True,
    ) -> "BoundedLattice":
        """Build from generating ``x <= y`` pairs (closed reflexively and transitively)."""
        return cls(elements, closure_from_relations(elements, pairs), name=name, require_lattice=require_lattice)

    def _check_order(self) -> None:
        leq = self._leq
        n = len(self._elements)
        if leq.shape != (n, n):
            raise ConstructionError(f"Order matrix must be {n}x{n}, got {leq.shape}", type(self).__name__)
        if n == 0:
            raise ConstructionError("A bounded lattice needs at least one element", type(self).__name__)
        if not leq.diagonal().all():
            raise LatticeError("Order relation is not reflexive")
        both = leq & leq.T & ~np.eye(n, dtype=bool)
        if both.any():
            i, j = map(int, np.argwhere(both)[0])
            raise LatticeError("Order relation is not antisymmetric", (self._elements[i], self._elements[j]))
        as_int = leq.astype(np.int64)
        broken = ((as_int @ as_int) > 0) & ~leq
        if broken.any():
            i, j = map(int, np.argwhere(broken)[0])
            raise LatticeError("Order relation is not transitive", (self._elements[i], self._elements[j]))

    def _find_bound(self, mask: np.ndarray, which: str) -> int:
        hits = np.flatnonzero(mask)
        if len(hits) != 1:
            raise LatticeError(f"Poset has no {which} element")
        return int(hits[0])

    # -- basic access -------------------------------------------------------

    @property
    def elements(self) -> Tuple[str, ...]:
        return self._elements

    @property
    def leq_matrix(self) -> np.ndarray:
        return self._leq

    @property
    def zero(self) -> str:
        return self._elements[self._zero]

    @property
    def one(self) -> str:
        return self._elements[self._one]

    @property
    def zero_index(self) -> int:
        return self._zero

    @property
    def one_index(self) -> int:
        return self._one

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self._elements)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __repr__(self) -> str:
        title = self.name or type(self).__name__
        return f"<{title} with {len(self)} elements>"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoundedLattice) or type(other) is not type(self):
            return NotImplemented
        return self._elements == other._elements and np.array_equal(self._leq, other._leq)

    def __hash__(self) -> int:
        return hash((self._elements, self._leq.tobytes()))

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownAtomError(f"Unknown element {label!r}", label) from None

    def le(self, x: str, y: str) -> bool:
        return bool(self._leq[self.index(x), self.index(y)])

    def implies(self, p: str, q: str) -> bool:
        """Read the order as implication: p -> q holds iff p <= q."""
        return self.le(p, q)

    # -- operation tables ---------------------------------------------------

    def _bound_table(self, leq: np.ndarray) -> np.ndarray:
        """Greatest common lower bound for every pair w.r.t. ``leq`` (NO_BOUND if absent).

        Called with ``leq.T`` it yields joins.
        """
        n = len(self._elements)
        down_count = leq.sum(axis=0)
        table = np.full((n, n), NO_BOUND, dtype=np.int64)
        for i in range(n):
            lower = leq[:, i][:, None] & leq
            scored = np.where(lower, down_count[:, None], -1)
            best = scored.argmax(axis=0)
            exists = np.all(~lower | leq[:, best], axis=0)
            table[i] = np.where(exists, best, NO_BOUND)
        table.setflags(write=False)
        return table

    @cached_property
    def meet_table(self) -> np.ndarray:
        return self._bound_table(self._leq)

    @cached_property
    def join_table(self) -> np.ndarray:
        return self._bound_table(self._leq.T)

    @cached_property
    def is_lattice(self) -> bool:
        return bool((self.meet_table != NO_BOUND).all() and (self.join_table != NO_BOUND).all())

    def first_missing_bound(self) -> Optional[Tuple[str, str]]:
        missing = (self.meet_table == NO_BOUND) | (self.join_table == NO_BOUND)
        if not missing.any():
            return None
        i, j = map(int, np.argwhere(missing)[0])
        return self._elements[i], self._elements[j]

    def meet_index(self, i: int, j: int) -> int:
        k = int(self.meet_table[i, j])
        if k == NO_BOUND:
            raise LatticeError("Meet does not exist", (self._elements[i], self._elements[j]))
        return k

    def join_index(self, i: int, j: int) -> int:
        k = int(self.join_table[i, j])
        if k == NO_BOUND:
            raise LatticeError("Join does not exist", (self._elements[i], self._elements[j]))
        return k

    def meet(self, x: str, y: str) -> str:
        return self._elements[self.meet_index(self.index(x), self.index(y))]

    def join(self, x: str, y: str) -> str:
        return self._elements[self.join_index(self.index(x), self.index(y))]

    # -- covers and atoms ---------------------------------------------------

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        strict = self._leq & ~np.eye(len(self._elements), dtype=bool)
        as_int = strict.astype(np.int64)
        covers = strict & ~((as_int @ as_int) > 0)
        covers.setflags(write=False)
        return covers

    def covers(self) -> List[Tuple[str, str]]:
        """Hasse edges (x, y) with x covered by y, in canonical order."""
        return [(self._elements[i], self._elements[j]) for i, j in np.argwhere(self.cover_matrix)]

    def atoms(self) -> List[str]:
        return [self._elements[j] for j in np.flatnonzero(self.cover_matrix[self._zero])]

    def heights(self) -> np.ndarray:
        """Length of the longest chain from 0 to each element."""
        n = len(self._elements)
        order = np.argsort(self._leq.sum(axis=0), kind="stable")
        height = np.zeros(n, dtype=np.int64)
        covers = self.cover_matrix
        for j in order:
            below = np.flatnonzero(covers[:, j])
            if len(below):
                height[j] = height[below].max() + 1
        return height

    def relabel(self, mapping: Mapping[str, str]) -> "BoundedLattice":
        labels = [mapping.get(x, x) for x in self._elements]
        return BoundedLattice(labels, self._leq, name=self.name, require_lattice=False)


class OrthoLattice(BoundedLattice):
    """A finite bounded lattice (or orthoposet) with an orthocomplementation."""

    def __init__(
        self,
        elements: Sequence[str],
        leq: np.ndarray,
        ortho: Union[Mapping[str, str], Sequence[str]],
        name: Optional[str] = None,
        require_lattice: bool = True,
    ):
        super().__init__(elements, leq, name=name, require_lattice=require_lattice)

        if isinstance(ortho, Mapping):
            try:
                images = [ortho[x] for x in self._elements]
            except KeyError as e:
                raise ConstructionError(f"Orthocomplement undefined for {e.args[0]!r}", "OrthoLattice") from None
        else:
            images = list(ortho)
            if len(images) != len(self._elements):
                raise ConstructionError("Orthocomplement must list one image per element", "OrthoLattice")

        perm = np.array([self.index(y) for y in images], dtype=np.int64)
        perm.setflags(write=False)
        self._ortho = perm
        self._check_ortho()

    @classmethod
    def from_relations(
        cls,
        elements: Sequence[str],
        pairs: Iterable[Tuple[str, str]],
        ortho: Union[Mapping[str, str], Sequence[str]] = (),
        name: Optional[str] = None,
        require_lattice: bool = True,
    ) -> "OrthoLattice":
        return cls(
            elements, closure_from_relations(elements, pairs), ortho, name=name, require_lattice=require_lattice
        )

    def _check_ortho(self) -> None:
        o = self._ortho
        n = len(self._elements)
        involution = o[o] != np.arange(n)
        if involution.any():
            i = int(np.flatnonzero(involution)[0])
            raise LatticeError("Orthocomplement is not an involution", (self._elements[i], self._elements[o[i]]))
        # x <= y must give y' <= x'
        reversed_ok = ~self._leq | self._leq[np.ix_(o, o)].T
        if not reversed_ok.all():
            i, j = map(int, np.argwhere(~reversed_ok)[0])
            raise LatticeError("Orthocomplement is not order-reversing", (self._elements[i], self._elements[j]))
        if o[self._zero] != self._one:
            raise LatticeError("Orthocomplement of 0 must be 1")

        # Complements must meet in 0 wherever the meet exists.
        meets = self.meet_table[np.arange(n), o]
        bad = (meets != NO_BOUND) & (meets != self._zero)
        if bad.any():
            i = int(np.flatnonzero(bad)[0])
            raise LatticeError("x and x' do not meet in 0", (self._elements[i], self._elements[o[i]]))

    @property
    def ortho_indices(self) -> np.ndarray:
        return self._ortho

    def ortho(self, x: str) -> str:
        return self._elements[self._ortho[self.index(x)]]

    def is_orthogonal(self, x: str, y: str) -> bool:
        """x is orthogonal to y iff x <= y'."""
        return bool(self._leq[self.index(x), self._ortho[self.index(y)]])

    @cached_property
    def orthogonality_matrix(self) -> np.ndarray:
        orth = self._leq[:, self._ortho]
        orth.setflags(write=False)
        return orth

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrthoLattice):
            return NotImplemented
        return (
            self._elements == other._elements
            and np.array_equal(self._leq, other._leq)
            and np.array_equal(self._ortho, other._ortho)
        )

    def __hash__(self) -> int:
        return hash((self._elements, self._leq.tobytes(), self._ortho.tobytes()))

    def relabel(self, mapping: Mapping[str, str]) -> "OrthoLattice":
        labels = [mapping.get(x, x) for x in self._elements]
        images = [labels[j] for j in self._ortho]
        return OrthoLattice(labels, self._leq, images, name=self.name, require_lattice=False)
