"""Shared fixtures: isolated settings, diagrams, posets and schemes."""

import random

import numpy as np
import pytest

from omlkit.config import ConfigManager, set_config_manager
from omlkit.kalmbach import SetPoset
from omlkit.lattice import GreechieDiagram
from omlkit.polytope import EventScheme


ENV_VARS = ("OMLKIT_TOL", "OMLKIT_MAX_ELEMENTS", "OMLKIT_CLOSURE_CAP", "OMLKIT_WORKERS", "OMLKIT_FORMAT", "DEBUG_MODE")


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """Every test sees default settings, whatever ~/.omlkit or the environment holds."""
    for var in ENV_VARS:
        monkeypatch.delenv(var, raising=False)
    manager = ConfigManager(tmp_path / "omlkit-config", load_env_file=False)
    set_config_manager(manager)
    yield manager
    set_config_manager(None)


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def np_rng():
    return np.random.default_rng(20240601)


# -- Greechie diagrams ---------------------------------------------------------

@pytest.fixture
def mo2_diagram():
    return GreechieDiagram.from_contexts([("p-", "p+"), ("q-", "q+")])


@pytest.fixture
def triad():
    return GreechieDiagram.from_contexts([("a", "b", "c")])


@pytest.fixture
def two_triads():
    """Two triads sharing the atom c; pastes to 2 × MO_2."""
    return GreechieDiagram.from_contexts([("a", "b", "c"), ("c", "d", "e")])


@pytest.fixture
def odd_loop():
    """Three pairs in a cycle; no two-valued state."""
    return GreechieDiagram.from_contexts([("a", "b"), ("b", "c"), ("c", "a")])


@pytest.fixture
def pentagon_loop():
    """Five triads in a loop, consecutive ones sharing an atom."""
    return GreechieDiagram.from_contexts([
        ("a1", "a2", "a3"),
        ("a3", "a4", "a5"),
        ("a5", "a6", "a7"),
        ("a7", "a8", "a9"),
        ("a9", "a10", "a1"),
    ])


@pytest.fixture
def diagram_fixtures(mo2_diagram, triad, two_triads, odd_loop, pentagon_loop):
    return [mo2_diagram, triad, two_triads, odd_loop, pentagon_loop]


# -- Kalmbach posets -----------------------------------------------------------

@pytest.fixture
def chain3():
    return SetPoset.from_sets([(), ("a",), ("a", "b")])


@pytest.fixture
def chain4():
    return SetPoset.from_sets([(), ("a",), ("a", "b"), ("a", "b", "c")])


@pytest.fixture
def square():
    """The Boolean algebra 2² as a set poset."""
    return SetPoset.from_sets([(), ("a",), ("b",), ("a", "b")])


@pytest.fixture
def pentagon_poset():
    """Chains ∅ < {a} < {a,b} < {a,b,c} and ∅ < {c} < {a,b,c}."""
    return SetPoset.from_sets([(), ("a",), ("a", "b"), ("c",), ("a", "b", "c")])


@pytest.fixture
def shared_element_poset():
    """Two maximal chains through the common element {a,b,c}."""
    return SetPoset.from_sets([(), ("a",), ("b",), ("a", "b", "c"), ("a", "b", "c", "d")])


# -- correlation polytopes -----------------------------------------------------

@pytest.fixture
def joint_pair():
    """p1, p2, p12."""
    return EventScheme.boolean(2, [(1, 2)])


@pytest.fixture
def clauser_horne():
    return EventScheme.clauser_horne()
