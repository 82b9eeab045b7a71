"""
Command-line front end for omlkit.
"""

from .main import build_parser, main, run

__all__ = ["build_parser", "main", "run"]
