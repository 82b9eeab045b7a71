"""
Lattice JSON documents: {format_version, elements, leq, ortho, zero, one}.
"""

import json
from typing import Any, Dict, Union

import numpy as np

from ..exceptions import ParseError, ToolkitError
from .ortholattice import BoundedLattice, OrthoLattice


FORMAT_VERSION = 1


def lattice_to_dict(lattice: BoundedLattice) -> Dict[str, Any]:
    """Strict order pairs in canonical order; ortho pairs when present."""
    labels = lattice.elements
    strict = lattice.leq_matrix & ~np.eye(len(lattice), dtype=bool)
    doc: Dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "name": lattice.name,
        "elements": list(labels),
        "leq": [[labels[i], labels[j]] for i, j in np.argwhere(strict)],
        "zero": lattice.zero,
        "one": lattice.one,
    }
    if isinstance(lattice, OrthoLattice):
        doc["ortho"] = [[x, labels[int(j)]] for x, j in zip(labels, lattice.ortho_indices)]
    return doc


def lattice_from_dict(doc: Dict[str, Any], source: str = "<json>") -> BoundedLattice:
    try:
        version = doc.get("format_version", FORMAT_VERSION)
        if version != FORMAT_VERSION:
            raise ParseError(f"Unsupported format_version {version}", source)
        elements = [str(x) for x in doc["elements"]]
        pairs = [(str(x), str(y)) for x, y in doc.get("leq", [])]
        name = doc.get("name")
        if "ortho" in doc:
            ortho = {str(x): str(y) for x, y in doc["ortho"]}
            lattice: BoundedLattice = OrthoLattice.from_relations(elements, pairs, ortho, name=name)
        else:
            lattice = BoundedLattice.from_relations(elements, pairs, name=name)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"Malformed lattice document: {e}", source) from None

    for key, actual in (("zero", lattice.zero), ("one", lattice.one)):
        if key in doc and doc[key] != actual:
            raise ToolkitError(f"Declared {key} {doc[key]!r} is not the order's {key} {actual!r}")
    return lattice


def dumps_lattice(lattice: BoundedLattice, indent: int = 2) -> str:
    return json.dumps(lattice_to_dict(lattice), indent=indent, ensure_ascii=False) + "\n"


def loads_lattice(text: str, source: str = "<json>") -> BoundedLattice:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, source, e.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("Lattice document must be a JSON object", source)
    return lattice_from_dict(doc, source)


def looks_like_json(text: Union[str, bytes]) -> bool:
    stripped = text.lstrip()
    return stripped[:1] in ("{", b"{")
