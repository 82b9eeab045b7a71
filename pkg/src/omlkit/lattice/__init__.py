"""
Finite ortholattices, Greechie diagrams and their law checks.
"""

from .ortholattice import BoundedLattice, OrthoLattice, closure_from_relations
from .constructors import (
    boolean,
    two_element,
    mo,
    horizontal_sum,
    product,
    subalgebra_family,
    benzene_ring,
    pentagon,
)
from .laws import (
    LawReport,
    is_distributive,
    is_modular,
    is_orthomodular,
    law_instance,
    check_laws,
    check_lattice_axioms,
    check_ortholattice_identities,
    are_compatible,
    compatibility_witness,
    implication_chain,
)
from .greechie import (
    GreechieDiagram,
    parse_greechie,
    emit_greechie,
    from_greechie,
    to_greechie,
    same_diagram,
)
from .isomorphism import signature, find_isomorphism, is_isomorphic, is_order_embedding
from .dot import hasse_dot, greechie_dot
from .io import lattice_to_dict, lattice_from_dict, dumps_lattice, loads_lattice

__all__ = [
    # Structures
    "BoundedLattice",
    "OrthoLattice",
    "closure_from_relations",
    "GreechieDiagram",

    # Constructors
    "boolean",
    "two_element",
    "mo",
    "horizontal_sum",
    "product",
    "subalgebra_family",
    "benzene_ring",
    "pentagon",
    "from_greechie",
    "to_greechie",

    # Laws
    "LawReport",
    "is_distributive",
    "is_modular",
    "is_orthomodular",
    "law_instance",
    "check_laws",
    "check_lattice_axioms",
    "check_ortholattice_identities",
    "are_compatible",
    "compatibility_witness",
    "implication_chain",

    # Isomorphism
    "signature",
    "find_isomorphism",
    "is_isomorphic",
    "is_order_embedding",

    # Formats
    "parse_greechie",
    "emit_greechie",
    "same_diagram",
    "hasse_dot",
    "greechie_dot",
    "lattice_to_dict",
    "lattice_from_dict",
    "dumps_lattice",
    "loads_lattice",
]
