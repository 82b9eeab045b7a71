"""
Small complex matrices with tolerance-based checks, the trace rule and
spectral decompositions.
"""

import logging
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_settings
from ..exceptions import DimensionMismatchError, ParseError, ToleranceError


logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9


def _tolerance(tolerance: Optional[float]) -> float:
    return get_settings().born.tolerance if tolerance is None else tolerance


@dataclass(frozen=True, eq=False)
class CMatrix:
    """A square complex matrix plus the tolerance used for its invariant checks."""

    data: np.ndarray
    tolerance: float = DEFAULT_TOLERANCE

    def __post_init__(self):
        data = np.array(self.data, dtype=np.complex128)
        if data.ndim != 2 or data.shape[0] != data.shape[1]:
            raise DimensionMismatchError(f"Expected a square matrix, got shape {data.shape}")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @classmethod
    def identity(cls, dim: int, tolerance: float = DEFAULT_TOLERANCE) -> "CMatrix":
        return cls(np.eye(dim), tolerance)

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def _wrap(self, data: np.ndarray) -> "CMatrix":
        return CMatrix(data, self.tolerance)

    def __matmul__(self, other: "CMatrix") -> "CMatrix":
        _same_dim(self, other)
        return self._wrap(self.data @ other.data)

    def __add__(self, other: "CMatrix") -> "CMatrix":
        _same_dim(self, other)
        return self._wrap(self.data + other.data)

    def __sub__(self, other: "CMatrix") -> "CMatrix":
        _same_dim(self, other)
        return self._wrap(self.data - other.data)

    def __mul__(self, factor: complex) -> "CMatrix":
        return self._wrap(self.data * factor)

    __rmul__ = __mul__

    def trace(self) -> complex:
        return complex(np.trace(self.data))

    def close_to(self, other: Any, tolerance: Optional[float] = None) -> bool:
        target = other.data if isinstance(other, CMatrix) else np.asarray(other, dtype=np.complex128)
        tol = self.tolerance if tolerance is None else tolerance
        return target.shape == self.data.shape and float(np.max(np.abs(self.data - target))) <= tol

    # -- invariants ---------------------------------------------------------

    def hermiticity_defect(self) -> float:
        return float(np.max(np.abs(self.data - self.data.conj().T)))

    def idempotence_defect(self) -> float:
        return float(np.max(np.abs(self.data @ self.data - self.data)))

    def is_hermitian(self) -> bool:
        return self.hermiticity_defect() <= self.tolerance

    def is_projector(self) -> bool:
        return self.is_hermitian() and self.idempotence_defect() <= self.tolerance

    def is_density(self) -> bool:
        if not self.is_hermitian():
            return False
        lowest = float(np.linalg.eigvalsh(self.data)[0])
        return lowest >= -self.tolerance and abs(self.trace() - 1) <= self.tolerance

    def require_hermitian(self, what: str = "operator") -> None:
        defect = self.hermiticity_defect()
        if defect > self.tolerance:
            raise ToleranceError(f"{what} is not hermitian", defect)

    def require_projector(self, what: str = "projector") -> None:
        self.require_hermitian(what)
        defect = self.idempotence_defect()
        if defect > self.tolerance:
            raise ToleranceError(f"{what} is not idempotent", defect)

    def require_density(self, what: str = "density operator") -> None:
        self.require_hermitian(what)
        lowest = float(np.linalg.eigvalsh(self.data)[0])
        if lowest < -self.tolerance:
            raise ToleranceError(f"{what} is not positive semidefinite", lowest)
        defect = abs(self.trace() - 1)
        if defect > self.tolerance:
            raise ToleranceError(f"{what} does not have unit trace", defect)

    # -- JSON ---------------------------------------------------------------

    def to_json(self) -> List[List[List[float]]]:
        """Row-major entries as [re, im] pairs."""
        return [[[float(z.real), float(z.imag)] for z in row] for row in self.data]

    @classmethod
    def from_json(cls, rows: Sequence[Sequence[Any]], tolerance: float = DEFAULT_TOLERANCE,
                  source: str = "<matrix>") -> "CMatrix":
        try:
            data = [[_entry(z) for z in row] for row in rows]
            return cls(np.array(data, dtype=np.complex128), tolerance)
        except (TypeError, ValueError, DimensionMismatchError) as e:
            raise ParseError(f"Malformed matrix: {e}", source) from None


def _entry(z: Any) -> complex:
    if isinstance(z, (int, float)):
        return complex(z)
    re, im = z
    return complex(float(re), float(im))


def _same_dim(*matrices: CMatrix) -> None:
    dims = {m.dim for m in matrices}
    if len(dims) != 1:
        first, second = sorted(dims)[:2]
        raise DimensionMismatchError("Matrix dimensions differ", expected=first, actual=second)


def ket_projector(x: Sequence[complex], tolerance: float = DEFAULT_TOLERANCE) -> CMatrix:
    """|x⟩⟨x| / ⟨x|x⟩."""
    vec = np.asarray(x, dtype=np.complex128)
    norm = float(np.vdot(vec, vec).real)
    if norm <= tolerance:
        raise ToleranceError("Cannot project onto the zero vector", norm)
    return CMatrix(np.outer(vec, vec.conj()) / norm, tolerance)


def born_probability(rho: CMatrix, e: CMatrix, tolerance: Optional[float] = None) -> float:
    """trace(ρE), clamped to [0, 1] only when it strays by less than the tolerance."""
    tol = _tolerance(tolerance)
    _same_dim(rho, e)
    rho.require_density()
    e.require_projector()
    p = float(np.trace(rho.data @ e.data).real)
    if p < -tol or p > 1 + tol:
        raise ToleranceError(f"Probability {p} lies outside [0, 1]", p)
    return min(1.0, max(0.0, p))


def spectral_decomposition(a: CMatrix, tolerance: Optional[float] = None) -> List[Tuple[float, CMatrix]]:
    """Eigenvalues (ascending, degenerate ones merged) with their eigenprojectors."""
    tol = _tolerance(tolerance)
    a.require_hermitian()
    values, vectors = np.linalg.eigh(a.data)
    groups: List[Tuple[float, List[int]]] = []
    for i, value in enumerate(values):
        if groups and abs(value - groups[-1][0]) <= tol * max(1.0, abs(value)) * 10:
            groups[-1][1].append(i)
        else:
            groups.append((float(value), [i]))

    result = []
    for value, members in groups:
        basis = vectors[:, members]
        projector = CMatrix(basis @ basis.conj().T, a.tolerance)
        result.append((float(np.mean(values[members])), projector))
    return result


def expectation(rho: CMatrix, a: CMatrix, tolerance: Optional[float] = None) -> float:
    """trace(ρA), cross-checked against Σ λᵢ trace(ρEᵢ)."""
    tol = _tolerance(tolerance)
    _same_dim(rho, a)
    rho.require_density()
    a.require_hermitian()
    direct = float(np.trace(rho.data @ a.data).real)
    resummed = sum(value * float(np.trace(rho.data @ p.data).real) for value, p in spectral_decomposition(a, tol))
    scale = max(1.0, float(np.max(np.abs(a.data))))
    if abs(direct - resummed) > tol * scale:
        raise ToleranceError("Spectral re-sum disagrees with trace(ρA)", abs(direct - resummed))
    return direct
