"""
Configuration models for omlkit.
"""

from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, field_validator


class OutputFormat(str, Enum):
    """Machine output formats understood by the CLI."""

    TEXT = "text"
    JSON = "json"
    DOT = "dot"


class LatticeSettings(BaseModel):
    """Size guards and parallelism for lattice-law scans."""

    max_elements: int = Field(1000, ge=1, description="Hard cap for O(|L|^3) law scans")
    allow_large: bool = Field(False, description="Override the max_elements guard")
    workers: int = Field(1, ge=1, le=32, description="Worker processes for law scans")
    parallel_threshold: int = Field(
        256, ge=2,
        description="Minimum lattice size before law scans are partitioned across workers",
    )


class StatesSettings(BaseModel):
    """Two-valued state enumeration settings."""

    brute_force_limit: int = Field(
        20, ge=1, le=26,
        description="Largest atom count for which the 2^n brute-force oracle runs",
    )


class RaySettings(BaseModel):
    """Exact ray machinery settings."""

    closure_cap: int = Field(10_000, ge=1, description="Maximum number of rays added by orthogeneration")


class BornSettings(BaseModel):
    """Numeric quantum-probability settings."""

    tolerance: float = Field(1e-9, gt=0.0, lt=1.0, description="Hermiticity/idempotence/trace tolerance")


class PolytopeSettings(BaseModel):
    """Correlation-polytope settings."""

    max_events: int = Field(20, ge=1, le=24, description="Largest n for 2^n vertex enumeration")


class OutputSettings(BaseModel):
    """Artifact emission settings."""

    format: OutputFormat = Field(OutputFormat.TEXT, description="Default output format")
    indent: int = Field(2, ge=0, le=8, description="JSON indentation")


class ToolkitSettings(BaseModel):
    """Main settings model."""

    lattice: LatticeSettings = Field(default_factory=LatticeSettings)
    states: StatesSettings = Field(default_factory=StatesSettings)
    rays: RaySettings = Field(default_factory=RaySettings)
    born: BornSettings = Field(default_factory=BornSettings)
    polytope: PolytopeSettings = Field(default_factory=PolytopeSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)

    version: str = Field("1.0.0", description="Toolkit version")
    debug_mode: bool = Field(False, description="Enable debug logging")
    log_file: Optional[Path] = Field(None, description="Optional log file in addition to stderr")

    @field_validator("log_file")
    @classmethod
    def expand_log_file(cls, v: Optional[Path]) -> Optional[Path]:
        """Expand ~ so TOML files can use home-relative paths."""
        if v is None:
            return v
        return Path(v).expanduser()

    def size_limit(self) -> Optional[int]:
        """Effective element cap for law scans (None when overridden)."""
        if self.lattice.allow_large:
            return None
        return self.lattice.max_elements
