"""Pydantic schemas for the CLI's JSON output (format_version 1)."""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


FORMAT_VERSION = 1


class Document(BaseModel):
    format_version: int = FORMAT_VERSION


# ---------------------------------------------------------------------------
# Lattices
# ---------------------------------------------------------------------------


class LawResult(BaseModel):
    law: str
    holds: bool
    statement: str = ""
    witness: Optional[List[str]] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None


class LatticeCheckResponse(Document):
    name: Optional[str] = None
    size: int
    laws: List[LawResult]
    identities: List[LawResult] = Field(default_factory=list)
    implications: List[str] = Field(default_factory=list)


# ---------------------------------------------------------------------------
# States and rays
# ---------------------------------------------------------------------------


class StatesResponse(Document):
    atoms: List[str]
    contexts: List[List[str]]
    count: int
    unital: bool
    separating: bool
    full: bool
    states: List[Dict[str, int]]


class KochenSpeckerResponse(Document):
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
    added_families: Dict[str, int]
    verdict: str


class RaysResponse(Document):
    input: int
    count: int
    rays: List[str]


class DiagramResponse(Document):
    atoms: List[str]
    contexts: List[List[str]]


# ---------------------------------------------------------------------------
# Kalmbach
# ---------------------------------------------------------------------------


class KalmbachResponse(Document):
    poset: List[str]
    blocks: List[Dict[str, Any]]
    mapping: Dict[str, str]
    lattice: Dict[str, Any]
    checks: List[LawResult]
    embedding_ok: bool
    states: Dict[str, Any]


# ---------------------------------------------------------------------------
# Polytopes
# ---------------------------------------------------------------------------


class InequalityModel(BaseModel):
    coeffs: List[int]
    bound: int
    text: Optional[str] = None


class FacetsResponse(Document):
    terms: List[str]
    vertices: int
    dimension: int
    facets: List[InequalityModel]
    equations: List[InequalityModel] = Field(default_factory=list)


class WeightModel(BaseModel):
    vertex: List[int]
    weight: str


class MembershipResponse(Document):
    terms: List[str]
    vector: List[str]
    classical: bool
    weights: List[WeightModel] = Field(default_factory=list)
    violated: Optional[InequalityModel] = None
    value: Optional[str] = None


# ---------------------------------------------------------------------------
# Born rule
# ---------------------------------------------------------------------------


class OutcomeModel(BaseModel):
    eigenvalue: float
    label: str
    values: List[int]


class UrResponse(Document):
    parameters: List[float]
    rotated: bool
    matrix: List[List[List[float]]]
    eigenvalues: List[float]
    expected: List[float]
    outcomes: List[OutcomeModel]


class ProbabilityResponse(Document):
    probability: float
    tolerance: float
