"""
Correlation polytopes: vertices, exact facets and classicality tests.
"""

from .scheme import EventScheme, vertices, parse_scheme, emit_scheme
from .hull import (
    Inequality,
    PolytopeH,
    facets,
    affine_hull,
    tight_vertices,
    check_dual_description,
    rank,
)
from .simplex import SimplexTableau, Membership, feasible_point, is_classical
from .io import emit_facets, facets_to_dict, parse_facets, parse_vector


__all__ = [
    # Schemes
    "EventScheme",
    "parse_scheme",
    "emit_scheme",
    "vertices",

    # Hull
    "Inequality",
    "PolytopeH",
    "facets",
    "affine_hull",
    "tight_vertices",
    "check_dual_description",
    "rank",

    # Membership
    "SimplexTableau",
    "Membership",
    "feasible_point",
    "is_classical",

    # Files
    "emit_facets",
    "facets_to_dict",
    "parse_facets",
    "parse_vector",
]
