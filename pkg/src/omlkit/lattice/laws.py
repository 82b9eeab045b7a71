"""
Exhaustive law checks on finite lattices.

Every scan walks the first variable in canonical element order and compares
both sides of the law for all remaining variables at once with numpy, so the
reported witness is always the lexicographically first failing tuple.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_settings
from ..exceptions import LatticeError, SizeLimitError
from .ortholattice import BoundedLattice, OrthoLattice


logger = logging.getLogger(__name__)

DISTRIBUTIVE = "distributive"
MODULAR = "modular"
ORTHOMODULAR = "orthomodular"

# (witness indices, lhs index, rhs index)
_Hit = Tuple[Tuple[int, ...], int, int]


@dataclass
class LawReport:
    """Outcome of one law scan."""

    law: str
    holds: bool
    witness: Optional[Tuple[str, ...]] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    statement: str = ""
    extra: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        return {
            "law": self.law,
            "holds": self.holds,
            "statement": self.statement,
            "witness": list(self.witness) if self.witness else None,
            "lhs": self.lhs,
            "rhs": self.rhs,
            **self.extra,
        }


_STATEMENTS = {
    DISTRIBUTIVE: "a ∨ (b ∧ c) = (a ∨ b) ∧ (a ∨ c)",
    MODULAR: "a ≤ c ⇒ (a ∨ b) ∧ c = a ∨ (b ∧ c)",
    ORTHOMODULAR: "a ≤ b ⇒ b = a ∨ (b ∧ a')",
}


def _guard(lattice: BoundedLattice, max_elements: Optional[int], allow_large: Optional[bool]) -> None:
    settings = get_settings()
    if max_elements is None:
        max_elements = settings.lattice.max_elements
    if allow_large is None:
        allow_large = settings.lattice.allow_large
    if not allow_large and len(lattice) > max_elements:
        raise SizeLimitError(
            f"Lattice has {len(lattice)} elements; law scans are capped at {max_elements}",
            size=len(lattice),
            limit=max_elements,
            details="pass allow_large to override",
        )


def _require_tables(lattice: BoundedLattice) -> Tuple[np.ndarray, np.ndarray]:
    if not lattice.is_lattice:
        raise LatticeError("Law checks need a lattice; meet or join missing", lattice.first_missing_bound())
    return lattice.meet_table, lattice.join_table


def _scan(law: str, meet: np.ndarray, join: np.ndarray, leq: np.ndarray,
          ortho: Optional[np.ndarray], start: int, stop: int) -> Optional[_Hit]:
    """First failing instance with the leading variable in [start, stop)."""
    n = len(meet)
    for a in range(start, stop):
        if law == DISTRIBUTIVE:
            lhs = join[a][meet]
            rhs = meet[join[a][:, None], join[a][None, :]]
            bad = lhs != rhs
        elif law == MODULAR:
            lhs = meet[join[a][:, None], np.arange(n)[None, :]]
            rhs = join[a][meet]
            bad = (lhs != rhs) & leq[a][None, :]
        else:
            rhs = join[a][meet[:, ortho[a]]]
            lhs = np.arange(n)
            bad = (lhs != rhs) & leq[a]
        if bad.any():
            pos = tuple(int(x) for x in np.argwhere(bad)[0])
            return (a,) + pos, int(lhs[pos]), int(rhs[pos])
    return None


def _scan_chunk(args: Tuple[Any, ...]) -> Optional[_Hit]:
    return _scan(*args)


def _run_scan(lattice: BoundedLattice, law: str, workers: Optional[int]) -> Optional[_Hit]:
    meet, join = _require_tables(lattice)
    ortho = lattice.ortho_indices if isinstance(lattice, OrthoLattice) else None
    leq = lattice.leq_matrix
    n = len(lattice)

    settings = get_settings()
    if workers is None:
        workers = settings.lattice.workers
    if workers <= 1 or n < settings.lattice.parallel_threshold:
        return _scan(law, meet, join, leq, ortho, 0, n)

    bounds = np.linspace(0, n, workers + 1, dtype=int)
    chunks = [(law, meet, join, leq, ortho, int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]
    logger.debug(f"Scanning {law} law over {n} elements with {len(chunks)} workers")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        hits = list(pool.map(_scan_chunk, chunks))
    # Chunks are ordered by leading variable, so the first hit is the global first.
    for hit in hits:
        if hit is not None:
            return hit
    return None


def _report(lattice: BoundedLattice, law: str, hit: Optional[_Hit]) -> LawReport:
    if hit is None:
        return LawReport(law, True, statement=_STATEMENTS[law])
    witness, lhs, rhs = hit
    labels = lattice.elements
    return LawReport(
        law,
        False,
        witness=tuple(labels[i] for i in witness),
        lhs=labels[lhs],
        rhs=labels[rhs],
        statement=_STATEMENTS[law],
    )


def is_distributive(lattice: BoundedLattice, max_elements: Optional[int] = None,
                    allow_large: Optional[bool] = None, workers: Optional[int] = None) -> LawReport:
    """Check a ∨ (b ∧ c) = (a ∨ b) ∧ (a ∨ c) for all triples."""
    _guard(lattice, max_elements, allow_large)
    return _report(lattice, DISTRIBUTIVE, _run_scan(lattice, DISTRIBUTIVE, workers))


def is_modular(lattice: BoundedLattice, max_elements: Optional[int] = None,
               allow_large: Optional[bool] = None, workers: Optional[int] = None) -> LawReport:
    """Check (a ∨ b) ∧ c = a ∨ (b ∧ c) for all a ≤ c."""
    _guard(lattice, max_elements, allow_large)
    return _report(lattice, MODULAR, _run_scan(lattice, MODULAR, workers))


def is_orthomodular(lattice: OrthoLattice, max_elements: Optional[int] = None,
                    allow_large: Optional[bool] = None, workers: Optional[int] = None) -> LawReport:
    """Check b = a ∨ (b ∧ a') for all a ≤ b."""
    if not isinstance(lattice, OrthoLattice):
        raise LatticeError("The orthomodular law needs an orthocomplemented lattice")
    _guard(lattice, max_elements, allow_large)
    return _report(lattice, ORTHOMODULAR, _run_scan(lattice, ORTHOMODULAR, workers))


def law_instance(lattice: BoundedLattice, law: str, *elements: str) -> LawReport:
    """Evaluate one instance of a law, e.g. the textbook MO_2 triple (p-, q-, q+).

    Instances outside the law's premise (a ≤ c, a ≤ b) hold vacuously.
    """
    meet, join = _require_tables(lattice)
    idx = [lattice.index(x) for x in elements]
    labels = lattice.elements
    leq = lattice.leq_matrix

    if law == DISTRIBUTIVE and len(idx) == 3:
        a, b, c = idx
        lhs, rhs = join[a, meet[b, c]], meet[join[a, b], join[a, c]]
    elif law == MODULAR and len(idx) == 3:
        a, b, c = idx
        if not leq[a, c]:
            return LawReport(law, True, statement=_STATEMENTS[law], extra={"vacuous": True})
        lhs, rhs = meet[join[a, b], c], join[a, meet[b, c]]
    elif law == ORTHOMODULAR and len(idx) == 2 and isinstance(lattice, OrthoLattice):
        a, b = idx
        if not leq[a, b]:
            return LawReport(law, True, statement=_STATEMENTS[law], extra={"vacuous": True})
        lhs, rhs = b, join[a, meet[b, lattice.ortho_indices[a]]]
    else:
        raise LatticeError(f"Cannot evaluate law {law!r} on {len(idx)} element(s)")

    holds = bool(lhs == rhs)
    return LawReport(
        law,
        holds,
        witness=None if holds else tuple(elements),
        lhs=labels[int(lhs)],
        rhs=labels[int(rhs)],
        statement=_STATEMENTS[law],
    )


def check_laws(lattice: BoundedLattice, **kwargs: Any) -> List[LawReport]:
    """Distributive, modular and (for ortholattices) orthomodular reports."""
    reports = [is_distributive(lattice, **kwargs), is_modular(lattice, **kwargs)]
    if isinstance(lattice, OrthoLattice):
        reports.append(is_orthomodular(lattice, **kwargs))
    return reports


def check_lattice_axioms(lattice: BoundedLattice) -> List[LawReport]:
    """Commutativity, associativity and absorption of meet and join."""
    meet, join = _require_tables(lattice)
    labels = lattice.elements
    n = len(lattice)
    reports = []

    def first(bad: np.ndarray) -> Optional[Tuple[str, ...]]:
        if not bad.any():
            return None
        return tuple(labels[int(i)] for i in np.argwhere(bad)[0])

    for name, table in (("meet", meet), ("join", join)):
        witness = first(table != table.T)
        reports.append(LawReport(f"{name} commutative", witness is None, witness=witness))

        # (a ∘ b) ∘ c against a ∘ (b ∘ c), one leading variable at a time
        witness = None
        for a in range(n):
            bad = table[table[a]] != table[a][table]
            if bad.any():
                b, c = map(int, np.argwhere(bad)[0])
                witness = (labels[a], labels[b], labels[c])
                break
        reports.append(LawReport(f"{name} associative", witness is None, witness=witness))

    witness = first(meet[np.arange(n)[:, None], join] != np.arange(n)[:, None])
    reports.append(LawReport("absorption a ∧ (a ∨ b) = a", witness is None, witness=witness))
    witness = first(join[np.arange(n)[:, None], meet] != np.arange(n)[:, None])
    reports.append(LawReport("absorption a ∨ (a ∧ b) = a", witness is None, witness=witness))
    return reports


def check_ortholattice_identities(lattice: OrthoLattice) -> List[LawReport]:
    """(p')' = p, 1' = 0, 0' = 1, p ∨ p' = 1 and p ∧ p' = 0."""
    meet, join = _require_tables(lattice)
    o = lattice.ortho_indices
    labels = lattice.elements
    n = len(lattice)
    zero, one = lattice.zero_index, lattice.one_index

    def report(name: str, bad: np.ndarray) -> LawReport:
        hits = np.flatnonzero(bad)
        witness = (labels[int(hits[0])],) if len(hits) else None
        return LawReport(name, witness is None, witness=witness)

    return [
        report("(p')' = p", o[o] != np.arange(n)),
        LawReport("1' = 0", bool(o[one] == zero)),
        LawReport("0' = 1", bool(o[zero] == one)),
        report("p ∨ p' = 1", join[np.arange(n), o] != one),
        report("p ∧ p' = 0", meet[np.arange(n), o] != zero),
    ]


def are_compatible(lattice: OrthoLattice, p: str, q: str) -> bool:
    """True iff p and q are comeasurable (see compatibility_witness)."""
    return compatibility_witness(lattice, p, q) is not None


def compatibility_witness(lattice: OrthoLattice, p: str, q: str) -> Optional[Tuple[str, str, str]]:
    """First mutually orthogonal (a, b, c) with p = a ∨ b and q = a ∨ c, or None."""
    _, join = _require_tables(lattice)
    pi, qi = lattice.index(p), lattice.index(q)
    orth = lattice.orthogonality_matrix
    labels = lattice.elements
    for a in range(len(lattice)):
        bs = np.flatnonzero(orth[a] & (join[a] == pi))
        cs = np.flatnonzero(orth[a] & (join[a] == qi))
        if len(bs) == 0 or len(cs) == 0:
            continue
        pairs = orth[np.ix_(bs, cs)]
        if pairs.any():
            b, c = np.argwhere(pairs)[0]
            return labels[a], labels[int(bs[b])], labels[int(cs[c])]
    return None


def implication_chain(reports: Sequence[LawReport]) -> bool:
    """distributive ⇒ modular ⇒ orthomodular on a list from check_laws."""
    holds = {r.law: r.holds for r in reports}
    if holds.get(DISTRIBUTIVE) and not holds.get(MODULAR):
        return False
    if ORTHOMODULAR in holds and holds.get(MODULAR) and not holds[ORTHOMODULAR]:
        return False
    return True
