"""Per-invocation state shared by the CLI commands: settings, streams and output helpers."""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, TextIO

from pydantic import BaseModel

from ..config import OutputFormat, ToolkitSettings
from ..exceptions import ParseError


logger = logging.getLogger(__name__)


@dataclass
class CommandContext:
    settings: ToolkitSettings
    stdin: TextIO
    stdout: TextIO
    stderr: TextIO
    format: OutputFormat = OutputFormat.TEXT
    expect: Optional[str] = None

    def read(self, path: str) -> str:
        """File contents; `-` reads standard input."""
        if path == "-":
            return self.stdin.read()
        try:
            return Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise ParseError(f"Cannot read input: {e.strerror}", path) from None

    def source(self, path: str) -> str:
        return "<stdin>" if path == "-" else path

    def write(self, text: str) -> None:
        self.stdout.write(text if text.endswith("\n") else text + "\n")

    def write_json(self, doc: Any) -> None:
        if isinstance(doc, BaseModel):
            doc = doc.model_dump(mode="json")
        self.write(json.dumps(doc, indent=self.settings.output.indent or None, ensure_ascii=False))

    def require_format(self, *allowed: OutputFormat) -> None:
        if self.format not in allowed:
            names = ", ".join(f.value for f in allowed)
            raise ParseError(f"--format {self.format.value} is not available here (use {names})")

    def check_expectation(self, outcome: bool, what: str) -> int:
        """Exit code for an outcome under --expect pass|fail."""
        if self.expect is None:
            return 0
        wanted = self.expect == "pass"
        if outcome != wanted:
            logger.error(f"Expected {what} to {'hold' if wanted else 'fail'}, but it {'held' if outcome else 'failed'}")
            return 1
        return 0
