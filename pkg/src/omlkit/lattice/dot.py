"""
Graphviz DOT text for Hasse and Greechie diagrams.

Only ``.source`` is used, so no Graphviz binary is required.
"""

from graphviz import Digraph, Graph

from .greechie import GreechieDiagram
from .ortholattice import BoundedLattice


def hasse_dot(lattice: BoundedLattice, name: str = "hasse") -> str:
    """Hasse diagram with covering edges only, drawn bottom to top."""
    dot = Digraph(name=name, comment=lattice.name or "lattice", strict=True)
    dot.attr(rankdir="BT")
    dot.attr("node", shape="circle")
    for i, label in enumerate(lattice.elements):
        dot.node(f"n{i}", label)
    covers = lattice.cover_matrix
    for i in range(len(lattice)):
        for j in range(len(lattice)):
            if covers[i, j]:
                dot.edge(f"n{i}", f"n{j}", arrowhead="none")
    return dot.source


def greechie_dot(diagram: GreechieDiagram, name: str = "greechie") -> str:
    """Greechie diagram as a bipartite graph: atoms as circles, contexts as small boxes."""
    dot = Graph(name=name, strict=True)
    dot.attr("node", shape="circle")
    for i, atom in enumerate(diagram.atoms):
        dot.node(f"a{i}", atom)
    position = {atom: i for i, atom in enumerate(diagram.atoms)}
    for c, context in enumerate(diagram.contexts):
        dot.node(f"c{c}", f"C{c + 1}", shape="box", style="rounded")
        for atom in context:
            dot.edge(f"c{c}", f"a{position[atom]}")
    return dot.source
