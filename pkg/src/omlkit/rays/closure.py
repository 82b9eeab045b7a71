"""
Orthogeneration (closure under nor of orthogonal pairs) and context extraction.
"""

import logging
from itertools import combinations
from typing import Iterable, List, Optional, Set

import networkx as nx

from ..config import get_settings
from ..exceptions import ClosureLimitError, ContextError, DimensionMismatchError
from ..lattice.greechie import GreechieDiagram
from .ray import Ray, is_orthogonal, nor


logger = logging.getLogger(__name__)


def ortho_closure(rays: Iterable[Ray], cap: Optional[int] = None) -> List[Ray]:
    """Least superset closed under nor of orthogonal pairs, in canonical order.

    Raises:
        ClosureLimitError: more than ``cap`` rays were added.
    """
    if cap is None:
        cap = get_settings().rays.closure_cap
    current: List[Ray] = list(dict.fromkeys(rays))
    for ray in current:
        if ray.dim != 3:
            raise DimensionMismatchError("Orthogeneration works on rays in R³", expected=3, actual=ray.dim)

    known: Set[Ray] = set(current)
    start = len(current)
    fresh_from = 0
    rounds = 0
    while True:
        rounds += 1
        added: List[Ray] = []
        # only pairs touching a ray from the previous round can yield something new
        for j in range(fresh_from, len(current)):
            for i in range(j):
                u, v = current[i], current[j]
                if not is_orthogonal(u, v):
                    continue
                w = nor(u, v)
                if w not in known:
                    known.add(w)
                    added.append(w)
                    if len(known) - start > cap:
                        raise ClosureLimitError(
                            f"Orthogeneration added more than {cap} rays", cap=cap
                        )
        logger.debug(f"Closure round {rounds}: {len(added)} new ray(s)")
        if not added:
            break
        fresh_from = len(current)
        current.extend(added)

    logger.info(f"Orthogenerated {len(current)} rays from {start} in {rounds} round(s)")
    return sorted(current)


def contexts(rays: Iterable[Ray], strict: bool = True) -> GreechieDiagram:
    """All maximal mutually orthogonal subsets as a Greechie diagram.

    With ``strict`` every maximal set must be a triad. Otherwise pairs are kept
    and rays orthogonal to no other ray are dropped.
    """
    ordered = sorted(dict.fromkeys(rays))
    graph = nx.Graph()
    graph.add_nodes_from(range(len(ordered)))
    for i, j in combinations(range(len(ordered)), 2):
        if is_orthogonal(ordered[i], ordered[j]):
            graph.add_edge(i, j)

    cliques = sorted(sorted(c) for c in nx.find_cliques(graph))
    dim = ordered[0].dim if ordered else 3
    offending = [c for c in cliques if len(c) != dim]
    if strict and offending:
        raise ContextError(
            f"{len(offending)} maximal orthogonal set(s) are not complete frames",
            [[str(ordered[i]) for i in c] for c in offending],
        )
    kept = [c for c in cliques if len(c) >= 2]
    if len(kept) < len(cliques):
        logger.warning(f"Dropped {len(cliques) - len(kept)} ray(s) orthogonal to no other ray")

    used = sorted({i for c in kept for i in c})
    atoms = tuple(str(ordered[i]) for i in used)
    diagram = GreechieDiagram(atoms, tuple(tuple(str(ordered[i]) for i in c) for c in kept))
    logger.info(f"Extracted {len(kept)} context(s) over {len(atoms)} rays")
    return diagram


def element_count_of_orthoposet(rays: Iterable[Ray]) -> int:
    """0, 1, the rays and the planes orthogonal to them or spanned by orthogonal pairs.

    Planes are identified by their normal ray. For a closed set every such
    normal is already one of the rays, giving 2 + 2·|rays|.
    """
    ordered = list(dict.fromkeys(rays))
    normals = set(ordered)
    for u, v in combinations(ordered, 2):
        if is_orthogonal(u, v):
            normals.add(nor(u, v))
    return 2 + len(ordered) + len(normals)
