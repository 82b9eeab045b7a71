"""
Exact rays over Q(√2), the Peres configuration and orthogeneration.
"""

from .scalar import Scalar, SQRT2, ZERO, ONE
from .ray import Ray, dot, is_orthogonal, nor
from .peres import (
    DERIVATION,
    peres_rays,
    three_generators,
    seventeen_generators,
    evaluate,
    replay_derivation,
    coordinate_families,
)
from .closure import ortho_closure, contexts, element_count_of_orthoposet
from .subalgebras import (
    Check,
    ProductCheckReport,
    mo_product_check,
    r4_vectors,
    r4_product_check,
    r6_vectors,
    r6_product_check,
    embeddable,
)
from .io import parse_rays, emit_rays, rays_to_greechie_text
from .report import KochenSpeckerReport, kochen_specker_report

__all__ = [
    # Arithmetic
    "Scalar",
    "SQRT2",
    "ZERO",
    "ONE",
    "Ray",
    "dot",
    "is_orthogonal",
    "nor",

    # Peres configuration
    "DERIVATION",
    "peres_rays",
    "three_generators",
    "seventeen_generators",
    "evaluate",
    "replay_derivation",
    "coordinate_families",
    "ortho_closure",
    "contexts",
    "element_count_of_orthoposet",
    "KochenSpeckerReport",
    "kochen_specker_report",

    # Subalgebras
    "Check",
    "ProductCheckReport",
    "mo_product_check",
    "r4_vectors",
    "r4_product_check",
    "r6_vectors",
    "r6_product_check",
    "embeddable",

    # Files
    "parse_rays",
    "emit_rays",
    "rays_to_greechie_text",
]
