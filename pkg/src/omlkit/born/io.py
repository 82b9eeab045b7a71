"""
JSON documents for matrices: {"format_version": 1, "dim": n, "entries": [[[re, im], ...], ...]}.
"""

import json
from typing import Any, Dict

from ..exceptions import ParseError
from .matrices import DEFAULT_TOLERANCE, CMatrix


FORMAT_VERSION = 1


def matrix_to_dict(m: CMatrix) -> Dict[str, Any]:
    return {"format_version": FORMAT_VERSION, "dim": m.dim, "entries": m.to_json()}


def matrix_from_dict(doc: Any, tolerance: float = DEFAULT_TOLERANCE, source: str = "<matrix>") -> CMatrix:
    if isinstance(doc, list):
        return CMatrix.from_json(doc, tolerance, source)
    if not isinstance(doc, dict) or "entries" not in doc:
        raise ParseError("Matrix document needs an 'entries' field", source)
    version = doc.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise ParseError(f"Unsupported format_version {version}", source)
    m = CMatrix.from_json(doc["entries"], tolerance, source)
    if "dim" in doc and doc["dim"] != m.dim:
        raise ParseError(f"Declared dim {doc['dim']} but found {m.dim}", source)
    return m


def dumps_matrix(m: CMatrix, indent: int = 2) -> str:
    return json.dumps(matrix_to_dict(m), indent=indent)


def loads_matrix(text: str, tolerance: float = DEFAULT_TOLERANCE, source: str = "<matrix>") -> CMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e.msg}", source, e.lineno) from None
    return matrix_from_dict(doc, tolerance, source)
