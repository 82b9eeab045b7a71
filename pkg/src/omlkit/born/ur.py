"""
The Ur-operator U = aJ₁² + bJ₂² + cJ₃² of a spin-one context and the
polynomial inversions that recover each Jᵢ² from U.

Two frames are available: the standard one, and a rotated one whose J̄₁²
and J̄₂² carry imaginary off-diagonal entries while J̄₃² coincides with J₃².
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..exceptions import DegenerateParametersError, ToleranceError
from .matrices import DEFAULT_TOLERANCE, CMatrix, _tolerance, spectral_decomposition


logger = logging.getLogger(__name__)

J_SQUARED = (
    0.5 * np.array([[1, 0, 1], [0, 2, 0], [1, 0, 1]], dtype=np.complex128),
    0.5 * np.array([[1, 0, -1], [0, 2, 0], [-1, 0, 1]], dtype=np.complex128),
    np.diag([1, 0, 1]).astype(np.complex128),
)

J_BAR_SQUARED = (
    0.5 * np.array([[1, 0, -1j], [0, 2, 0], [1j, 0, 1]], dtype=np.complex128),
    0.5 * np.array([[1, 0, 1j], [0, 2, 0], [-1j, 0, 1]], dtype=np.complex128),
    np.diag([1, 0, 1]).astype(np.complex128),
)

# eigenvalue of U -> (J₁², J₂², J₃²) on that eigenspace
OUTCOME_PATTERNS = {
    "a+b": (1, 1, 0),
    "a+c": (1, 0, 1),
    "b+c": (0, 1, 1),
}


def _require_distinct(a: float, b: float, c: float) -> None:
    if a == b or b == c or a == c:
        raise DegenerateParametersError(f"Parameters must be pairwise distinct, got ({a}, {b}, {c})")


def j_squared(rotated: bool = False, tolerance: float = DEFAULT_TOLERANCE) -> Tuple[CMatrix, CMatrix, CMatrix]:
    frame = J_BAR_SQUARED if rotated else J_SQUARED
    return tuple(CMatrix(m, tolerance) for m in frame)


def _combine(frame, a: float, b: float, c: float, tolerance: float) -> CMatrix:
    _require_distinct(a, b, c)
    return CMatrix(a * frame[0] + b * frame[1] + c * frame[2], tolerance)


def ur_operator(a: float, b: float, c: float, tolerance: float = DEFAULT_TOLERANCE) -> CMatrix:
    """½[[a+b+2c, 0, a−b], [0, 2a+2b, 0], [a−b, 0, a+b+2c]]."""
    return _combine(J_SQUARED, a, b, c, tolerance)


def rotated_ur(a: float, b: float, c: float, tolerance: float = DEFAULT_TOLERANCE) -> CMatrix:
    """½[[a+b+2c, 0, −ia+ib], [0, 2a+2b, 0], [ia−ib, 0, a+b+2c]]."""
    return _combine(J_BAR_SQUARED, a, b, c, tolerance)


def expected_eigenvalues(a: float, b: float, c: float) -> List[float]:
    return sorted([a + b, b + c, a + c])


def eigenvalues(u: CMatrix) -> List[float]:
    u.require_hermitian("Ur-operator")
    return [float(v) for v in np.linalg.eigvalsh(u.data)]


def reconstruct_j_squared(u: CMatrix, a: float, b: float, c: float) -> Tuple[CMatrix, CMatrix, CMatrix]:
    """Recover (J₁², J₂², J₃²) as quadratic polynomials in U.

    J₁² = [(a−b)(c−a)]⁻¹ (U − (b+c))(U − 2a), and cyclically for J₂², J₃².
    Each result is checked to be a projector.
    """
    _require_distinct(a, b, c)
    u.require_hermitian("Ur-operator")
    eye = np.eye(u.dim, dtype=np.complex128)
    m = u.data

    def poly(shift: float, double: float, denominator: float) -> CMatrix:
        return CMatrix((m - shift * eye) @ (m - double * eye) / denominator, u.tolerance)

    result = (
        poly(b + c, 2 * a, (a - b) * (c - a)),
        poly(a + c, 2 * b, (a - b) * (b - c)),
        poly(a + b, 2 * c, (c - a) * (b - c)),
    )
    for index, j in enumerate(result, start=1):
        j.require_projector(f"reconstructed J{index}²")
    return result


@dataclass
class ExclusivityRow:
    """Values of the three Jᵢ² on one eigenspace of U."""

    eigenvalue: float
    label: str
    values: Tuple[int, int, int]

    @property
    def exclusive(self) -> bool:
        return sorted(self.values) == [0, 1, 1]

    def to_dict(self) -> Dict[str, Any]:
        return {"eigenvalue": self.eigenvalue, "label": self.label, "values": list(self.values)}


def _label(value: float, a: float, b: float, c: float, tol: float) -> str:
    sums = {"a+b": a + b, "a+c": a + c, "b+c": b + c}
    for label, total in sums.items():
        if abs(value - total) <= tol * max(1.0, abs(total)) * 10:
            return label
    return "?"


def exclusivity_table(u: CMatrix, a: float, b: float, c: float,
                      tolerance: Optional[float] = None) -> List[ExclusivityRow]:
    """For every eigenprojector P of U, the eigenvalue of each reconstructed Jᵢ² on P."""
    tol = _tolerance(tolerance)
    js = reconstruct_j_squared(u, a, b, c)
    rows = []
    for value, projector in spectral_decomposition(u, tol):
        rank = projector.trace().real
        bits = []
        for index, j in enumerate(js, start=1):
            restricted = float(np.trace(j.data @ projector.data).real) / rank
            bit = round(restricted)
            if bit not in (0, 1) or abs(restricted - bit) > tol * 10:
                raise ToleranceError(f"J{index}² is not sharp on the eigenspace of {value}", restricted)
            bits.append(bit)
        rows.append(ExclusivityRow(value, _label(value, a, b, c, tol), tuple(bits)))
    logger.debug(f"Exclusivity table for ({a}, {b}, {c}): {[r.values for r in rows]}")
    return rows


def ur_measurement_outcomes(a: float, b: float, c: float, rotated: bool = False,
                            tolerance: float = DEFAULT_TOLERANCE) -> List[ExclusivityRow]:
    """Reading off a single U-measurement: which pair of Jᵢ² is 1 for each outcome."""
    build = rotated_ur if rotated else ur_operator
    u = build(a, b, c, tolerance)
    rows = exclusivity_table(u, a, b, c, tolerance)
    for row in rows:
        if row.label in OUTCOME_PATTERNS and row.values != OUTCOME_PATTERNS[row.label]:
            raise ToleranceError(f"Outcome {row.label} has pattern {row.values}", row.eigenvalue)
    return rows
