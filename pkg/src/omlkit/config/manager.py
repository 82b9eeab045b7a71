"""
Layered settings for omlkit: defaults, config.toml, environment, CLI overrides.
"""

import copy
import logging
import os
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, Optional, Tuple

import tomlkit
from dotenv import load_dotenv
from pydantic import ValidationError

from .models import ToolkitSettings


logger = logging.getLogger(__name__)

CONFIG_FILENAME = "config.toml"
DEFAULT_CONFIG_DIR = Path.home() / ".omlkit"

# variable -> (section, field, parser)
ENVIRONMENT: Dict[str, Tuple[str, str, Callable[[str], Any]]] = {
    "OMLKIT_TOL": ("born", "tolerance", float),
    "OMLKIT_MAX_ELEMENTS": ("lattice", "max_elements", int),
    "OMLKIT_CLOSURE_CAP": ("rays", "closure_cap", int),
    "OMLKIT_WORKERS": ("lattice", "workers", int),
    "OMLKIT_FORMAT": ("output", "format", str),
}

_TRUTHY = {"true", "1", "yes", "on"}


def merge(target: Dict[str, Any], layer: Dict[str, Any]) -> Dict[str, Any]:
    """Merge `layer` into `target` section by section; later layers win."""
    for key, value in layer.items():
        below = target.get(key)
        if isinstance(below, dict) and isinstance(value, dict):
            merge(below, value)
        else:
            target[key] = value
    return target


def strip_none(doc: Dict[str, Any]) -> Dict[str, Any]:
    """Drop None values and emptied sections; TOML has no null."""
    out: Dict[str, Any] = {}
    for key, value in doc.items():
        if isinstance(value, dict):
            value = strip_none(value) or None
        if value is not None:
            out[key] = value
    return out


def _error_paths(error: ValidationError, depth: Optional[int]) -> Iterable[Tuple[Any, ...]]:
    for err in error.errors():
        loc = tuple(err.get("loc", ()))
        if loc:
            yield loc if depth is None else loc[:depth]


def _discard(data: Dict[str, Any], path: Tuple[Any, ...]) -> None:
    node: Any = data
    for key in path[:-1]:
        node = node.get(key) if isinstance(node, dict) else None
    if isinstance(node, dict):
        node.pop(path[-1], None)


def validate(data: Dict[str, Any]) -> ToolkitSettings:
    """Build settings, discarding what fails validation.

    Offending fields go first, then their whole sections; defaults are the
    last resort.
    """
    candidate = copy.deepcopy(data)
    for depth in (None, 1):
        try:
            return ToolkitSettings(**candidate)
        except ValidationError as e:
            scope = "field(s)" if depth is None else "section(s)"
            logger.warning(f"Invalid configuration, discarding {scope}: {e}")
            for path in _error_paths(e, depth):
                _discard(candidate, path)
    try:
        return ToolkitSettings(**candidate)
    except ValidationError as e:
        logger.error(f"Configuration unusable, falling back to defaults: {e}")
        return ToolkitSettings()


class ConfigManager:
    """Settings for one configuration directory."""

    def __init__(self, config_dir: Optional[Path] = None, load_env_file: bool = True):
        """
        Args:
            config_dir: Directory holding config.toml (and optionally .env). Defaults to ~/.omlkit.
            load_env_file: Read a .env file into the environment before the first load.
        """
        self.config_dir = Path(config_dir) if config_dir is not None else DEFAULT_CONFIG_DIR
        self.config_file = self.config_dir / CONFIG_FILENAME
        self._settings: Optional[ToolkitSettings] = None
        if load_env_file:
            self._read_dotenv()

    @property
    def settings(self) -> ToolkitSettings:
        if self._settings is None:
            self._settings = self.load_settings()
        return self._settings

    def load_settings(self, overrides: Optional[Dict[str, Any]] = None) -> ToolkitSettings:
        """Merge file, environment and `overrides` (the CLI flags) over the defaults."""
        data: Dict[str, Any] = {}
        for layer in (self._file_layer(), self._environment_layer(), overrides or {}):
            merge(data, copy.deepcopy(layer))
        return validate(data)

    def apply_overrides(self, overrides: Dict[str, Any]) -> ToolkitSettings:
        """Reload with `overrides` on top; nothing is written to disk."""
        self._settings = self.load_settings(overrides)
        return self._settings

    def _file_layer(self) -> Dict[str, Any]:
        if not self.config_file.exists():
            return {}
        try:
            doc = tomlkit.parse(self.config_file.read_text(encoding="utf-8"))
        except Exception as e:
            logger.warning(f"Ignoring unreadable {self.config_file}: {e}")
            return {}
        logger.debug(f"Read settings from {self.config_file}")
        return doc.unwrap()

    @staticmethod
    def _environment_layer() -> Dict[str, Any]:
        layer: Dict[str, Any] = {}
        for var, (section, name, parse) in ENVIRONMENT.items():
            raw = os.getenv(var)
            if not raw:
                continue
            try:
                layer.setdefault(section, {})[name] = parse(raw)
            except ValueError:
                logger.warning(f"Ignoring {var}={raw!r}")
        debug = os.getenv("DEBUG_MODE")
        if debug:
            layer["debug_mode"] = debug.strip().lower() in _TRUTHY
        return layer

    def _read_dotenv(self) -> None:
        # src/omlkit/config/manager.py -> repository root
        candidates = (Path(__file__).resolve().parents[3] / ".env", self.config_dir / ".env")
        found = next((p for p in candidates if p.is_file()), None)
        if found is None:
            return
        try:
            load_dotenv(found)
            logger.debug(f"Environment read from {found}")
        except Exception as e:
            logger.warning(f"Could not read {found}: {e}")

    def _write(self, settings: ToolkitSettings, path: Path) -> bool:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(tomlkit.dumps(strip_none(settings.model_dump(mode="json"))), encoding="utf-8")
        except OSError as e:
            logger.error(f"Could not write settings to {path}: {e}")
            return False
        logger.info(f"Settings written to {path}")
        return True

    def save_settings(self, settings: ToolkitSettings) -> bool:
        return self._write(settings, self.config_file)

    def export_config(self, export_path: Path) -> bool:
        """Write the effective settings to an arbitrary TOML file."""
        return self._write(self.settings, Path(export_path))

    def update_settings(self, **sections: Any) -> bool:
        """Validate and persist partial changes, e.g. ``update_settings(rays={"closure_cap": 500})``."""
        data = merge(self.settings.model_dump(), sections)
        try:
            updated = ToolkitSettings(**data)
        except ValidationError as e:
            logger.error(f"Rejected settings update: {e}")
            return False
        if not self.save_settings(updated):
            return False
        self._settings = updated
        return True

    def reset_to_defaults(self) -> ToolkitSettings:
        self._settings = ToolkitSettings()
        self.save_settings(self._settings)
        return self._settings


_manager: Optional[ConfigManager] = None


def get_config_manager() -> ConfigManager:
    global _manager
    if _manager is None:
        _manager = ConfigManager()
    return _manager


def set_config_manager(manager: Optional[ConfigManager]) -> None:
    """Install the manager the CLI built from --config; None restores lazy defaults."""
    global _manager
    _manager = manager


def get_settings() -> ToolkitSettings:
    return get_config_manager().settings
