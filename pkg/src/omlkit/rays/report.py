"""
End-to-end Kochen-Specker run on the Peres configuration.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from ..states import classify, enumerate_states, symmetric_seed
from .closure import contexts, element_count_of_orthoposet, ortho_closure
from .peres import coordinate_families, peres_rays, replay_derivation, seventeen_generators
from .ray import Ray


logger = logging.getLogger(__name__)


@dataclass
class KochenSpeckerReport:
    """Counts produced by generate → close → contexts → states."""

    generated: int
    derivation_matches: bool
    closure: int
    poset_elements: int
    contexts: int
    triads_only: bool
    states: int
    seeded_states: int
    seventeen_generators: int
    seventeen_closure_matches: bool
    added_families: Dict[str, int] = field(default_factory=dict)
    elapsed_seconds: float = 0.0

    @property
    def two_valued_states_exist(self) -> bool:
        return self.states > 0

    def verdict(self) -> str:
        if self.two_valued_states_exist:
            return f"{self.states} two-valued state(s) exist"
        return "no two-valued state exists"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "generated": self.generated,
            "derivation_matches": self.derivation_matches,
            "closure": self.closure,
            "poset_elements": self.poset_elements,
            "contexts": self.contexts,
            "triads_only": self.triads_only,
            "states": self.states,
            "seeded_states": self.seeded_states,
            "seventeen_generators": self.seventeen_generators,
            "seventeen_closure_matches": self.seventeen_closure_matches,
            "added_families": self.added_families,
            "verdict": self.verdict(),
        }


def kochen_specker_report(cap: Optional[int] = None) -> KochenSpeckerReport:
    started = time.perf_counter()
    generated = peres_rays()
    derivation_matches = set(replay_derivation()) == set(generated)

    closed = ortho_closure(generated, cap=cap)
    original = set(generated)
    added = [r for r in closed if r not in original]
    diagram = contexts(closed, strict=True)
    states = enumerate_states(diagram)
    classification = classify(diagram, states)
    seeded = symmetric_seed(diagram, str(Ray((1, 0, 0))))

    seventeen = seventeen_generators()
    seventeen_closed = ortho_closure(seventeen, cap=cap)

    report = KochenSpeckerReport(
        generated=len(generated),
        derivation_matches=derivation_matches,
        closure=len(closed),
        poset_elements=element_count_of_orthoposet(closed),
        contexts=len(diagram.contexts),
        triads_only=all(len(c) == 3 for c in diagram.contexts),
        states=classification.count,
        seeded_states=len(seeded),
        seventeen_generators=len(seventeen),
        seventeen_closure_matches=set(seventeen_closed) == set(closed),
        added_families=coordinate_families(added),
        elapsed_seconds=time.perf_counter() - started,
    )
    logger.info(
        f"Kochen-Specker run: {report.generated} -> {report.closure} rays, "
        f"{report.poset_elements} elements, {report.states} state(s) "
        f"in {report.elapsed_seconds:.2f}s"
    )
    return report
