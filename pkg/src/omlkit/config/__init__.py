"""
Configuration package for omlkit.
"""

from .models import (
    ToolkitSettings,
    LatticeSettings,
    StatesSettings,
    RaySettings,
    BornSettings,
    PolytopeSettings,
    OutputSettings,
    OutputFormat,
)
from .manager import ConfigManager, get_config_manager, set_config_manager, get_settings

__all__ = [
    # Models
    "ToolkitSettings",
    "LatticeSettings",
    "StatesSettings",
    "RaySettings",
    "BornSettings",
    "PolytopeSettings",
    "OutputSettings",
    "OutputFormat",

    # Manager
    "ConfigManager",
    "get_config_manager",
    "set_config_manager",
    "get_settings",
]
