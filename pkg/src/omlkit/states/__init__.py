"""
Two-valued states on Greechie diagrams.
"""

from .valuations import (
    TwoValuedState,
    StateClassification,
    enumerate_states,
    enumerate_states_brute_force,
    symmetric_seed,
    is_admissible,
    classify,
    states_to_list,
)

__all__ = [
    "TwoValuedState",
    "StateClassification",
    "enumerate_states",
    "enumerate_states_brute_force",
    "symmetric_seed",
    "is_admissible",
    "classify",
    "states_to_list",
]
