"""
Subcommand modules; each exposes ``register(subparsers, common)``.
"""

from . import born, kalmbach, lattice, polytope, rays, states

COMMAND_MODULES = (lattice, states, rays, kalmbach, polytope, born)

__all__ = ["COMMAND_MODULES"]
