"""
Facet files (`c1 c2 ... ck <= b`, one per line, hull equations with `=`)
and probability vectors on the command line.
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional

from ..exceptions import ParseError
from .hull import Inequality, PolytopeH
from .scheme import EventScheme


FORMAT_VERSION = 1


def emit_facets(poly: PolytopeH, scheme: Optional[EventScheme] = None) -> str:
    header = f"# {' '.join(scheme.term_names())}\n" if scheme is not None else ""
    return header + poly.to_text()


def facets_to_dict(poly: PolytopeH, scheme: Optional[EventScheme] = None) -> Dict[str, Any]:
    doc: Dict[str, Any] = {"format_version": FORMAT_VERSION}
    if scheme is not None:
        names = scheme.term_names()
        doc["terms"] = names
        doc.update(poly.to_dict())
        for entry, f in zip(doc["facets"], poly.inequalities):
            entry["text"] = f.pretty(names)
        for entry, f in zip(doc["equations"], poly.equations):
            entry["text"] = f.pretty(names)
    else:
        doc.update(poly.to_dict())
    return doc


def parse_facets(text: str, source: str = "<facets>") -> PolytopeH:
    inequalities: List[Inequality] = []
    equations: List[Inequality] = []
    dimension = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        op = "<=" if "<=" in line else "="
        lhs, sep, rhs = line.partition(op)
        try:
            coeffs = tuple(int(tok) for tok in lhs.split())
            bound = int(rhs.strip())
        except ValueError:
            raise ParseError(f"Bad inequality '{line}'", source, lineno) from None
        if not sep or not coeffs:
            raise ParseError(f"Bad inequality '{line}'", source, lineno)
        if dimension is None:
            dimension = len(coeffs)
        elif len(coeffs) != dimension:
            raise ParseError(f"Expected {dimension} coefficients, got {len(coeffs)}", source, lineno)
        target = equations if op == "=" else inequalities
        target.append(Inequality(coeffs, bound, equality=op == "="))
    if dimension is None:
        raise ParseError("No inequalities found", source)
    return PolytopeH(dimension, inequalities, equations)


def parse_vector(text: str, source: str = "<vector>") -> List[Fraction]:
    """Comma or space separated rationals such as `1/2,1/2,1/4`."""
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ParseError("Empty vector", source)
    try:
        return [Fraction(tok) for tok in tokens]
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"Bad rational vector '{text}'", source) from None
