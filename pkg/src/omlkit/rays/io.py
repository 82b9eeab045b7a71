"""
Ray file format: one ray per line, comma-separated coordinates, # comments.

Coordinates are "p/q", "r/s r2" or "p/q+r/s r2", where r2 stands for √2.
"""

from typing import Iterable, List

from ..exceptions import ParseError
from ..lattice.greechie import emit_greechie
from .closure import contexts
from .ray import Ray


def parse_rays(text: str, source: str = "<rays>") -> List[Ray]:
    rays: List[Ray] = []
    dim = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        ray = Ray.parse(line, source, lineno)
        if dim is None:
            dim = ray.dim
        elif ray.dim != dim:
            raise ParseError(f"Ray has dimension {ray.dim}, expected {dim}", source, lineno)
        rays.append(ray)
    if not rays:
        raise ParseError("No rays found", source)
    return rays


def emit_rays(rays: Iterable[Ray]) -> str:
    return "".join(ray.to_line() + "\n" for ray in rays)


def rays_to_greechie_text(rays: Iterable[Ray], strict: bool = True) -> str:
    """Contexts of a ray set in the Greechie text format."""
    return emit_greechie(contexts(rays, strict=strict))
