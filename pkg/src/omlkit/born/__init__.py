"""
Numeric quantum probability: the trace rule, expectations and the Ur-operator.
"""

from .matrices import (
    DEFAULT_TOLERANCE,
    CMatrix,
    ket_projector,
    born_probability,
    spectral_decomposition,
    expectation,
)
from .ur import (
    J_SQUARED,
    J_BAR_SQUARED,
    OUTCOME_PATTERNS,
    ExclusivityRow,
    j_squared,
    ur_operator,
    rotated_ur,
    eigenvalues,
    expected_eigenvalues,
    reconstruct_j_squared,
    exclusivity_table,
    ur_measurement_outcomes,
)
from .io import matrix_to_dict, matrix_from_dict, dumps_matrix, loads_matrix

__all__ = [
    # Matrices
    "DEFAULT_TOLERANCE",
    "CMatrix",
    "ket_projector",
    "born_probability",
    "spectral_decomposition",
    "expectation",

    # Ur-operator
    "J_SQUARED",
    "J_BAR_SQUARED",
    "OUTCOME_PATTERNS",
    "ExclusivityRow",
    "j_squared",
    "ur_operator",
    "rotated_ur",
    "eigenvalues",
    "expected_eigenvalues",
    "reconstruct_j_squared",
    "exclusivity_table",
    "ur_measurement_outcomes",

    # Files
    "matrix_to_dict",
    "matrix_from_dict",
    "dumps_matrix",
    "loads_matrix",
]
