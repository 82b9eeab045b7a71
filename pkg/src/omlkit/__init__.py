"""
omlkit

Finite quantum-logic structures: orthomodular lattices, Greechie diagrams,
two-valued states, Kochen-Specker ray sets, Born-rule probabilities,
Kalmbach embeddings and correlation polytopes.
"""

__version__ = "1.0.0"
