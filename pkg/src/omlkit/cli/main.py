"""omlkit command-line entry point.

    omlkit ks peres
    omlkit lattice mo 2 | omlkit lattice check - --expect pass --law modular

Machine output goes to stdout, diagnostics and logs to stderr. Exit codes:
0 success, 1 domain failure or --expect mismatch, 2 parse/usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO

from .. import __version__
from ..config import ConfigManager, OutputFormat, ToolkitSettings, set_config_manager
from ..exceptions import ParseError, ToolkitError
from .commands import COMMAND_MODULES
from .context import CommandContext


logger = logging.getLogger(__name__)

_NOISY_LOGGERS = ("graphviz", "matplotlib", "numexpr")


def _common_options() -> argparse.ArgumentParser:
    """Options accepted after every leaf subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("common options")
    group.add_argument("--format", choices=[f.value for f in OutputFormat], default=None,
                       help="Output format (default from settings: text)")
    group.add_argument("--expect", choices=["pass", "fail"], default=None,
                       help="Exit 1 unless the command's check has this outcome")
    group.add_argument("--tol", type=float, default=None, help="Numeric tolerance (overrides OMLKIT_TOL)")
    group.add_argument("--max-elements", type=int, default=None, help="Size guard for law scans")
    group.add_argument("--allow-large", action="store_true", default=None, help="Lift the size guard")
    group.add_argument("--closure-cap", type=int, default=None, help="Maximum rays added by orthogeneration")
    group.add_argument("--workers", type=int, default=None, help="Worker processes for law scans")
    group.add_argument("--config", type=Path, default=None, metavar="DIR",
                       help="Configuration directory holding config.toml (default ~/.omlkit)")
    group.add_argument("--debug", action="store_true", default=None, help="Debug logging")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omlkit",
        description="Finite quantum-logic structures: lattices, states, rays, polytopes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_options()
    for module in COMMAND_MODULES:
        module.register(subparsers, common)
    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    """Nested settings overrides for the flags that were given."""
    overrides: Dict[str, Any] = {}
    for flag, section, field in (
        ("tol", "born", "tolerance"),
        ("max_elements", "lattice", "max_elements"),
        ("allow_large", "lattice", "allow_large"),
        ("workers", "lattice", "workers"),
        ("closure_cap", "rays", "closure_cap"),
        ("format", "output", "format"),
    ):
        value = getattr(args, flag, None)
        if value is not None:
            overrides.setdefault(section, {})[field] = value
    if getattr(args, "debug", None):
        overrides["debug_mode"] = True
    return overrides


def _setup_logging(settings: ToolkitSettings, stderr: TextIO) -> None:
    handlers: List[logging.Handler] = [logging.StreamHandler(stderr)]
    if settings.log_file is not None:
        try:
            settings.log_file.parent.mkdir(parents=True, exist_ok=True)
            handlers.append(logging.FileHandler(settings.log_file, encoding="utf-8"))
        except OSError as e:
            stderr.write(f"warning: cannot open log file {settings.log_file}: {e.strerror}\n")
    logging.basicConfig(
        level=logging.DEBUG if settings.debug_mode else logging.INFO,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        handlers=handlers,
        force=True,
    )
    for noisy in _NOISY_LOGGERS:
        logging.getLogger(noisy).setLevel(logging.WARNING)


def run(
    argv: Optional[Sequence[str]] = None,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """Parse ``argv``, run one subcommand and return its exit code."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    manager = ConfigManager(args.config)
    settings = manager.apply_overrides(_overrides(args))
    set_config_manager(manager)
    _setup_logging(settings, stderr)

    ctx = CommandContext(
        settings=settings,
        stdin=stdin,
        stdout=stdout,
        stderr=stderr,
        format=settings.output.format,
        expect=args.expect,
    )
    logger.debug(f"omlkit {__version__}: {args.command} with {vars(args)}")
    try:
        return args.handler(args, ctx)
    except ParseError as e:
        stderr.write(f"error: {e}\n")
        return 2
    except ToolkitError as e:
        stderr.write(f"error: {e}\n")
        return 1
    except KeyboardInterrupt:
        stderr.write("interrupted\n")
        return 130
    finally:
        set_config_manager(None)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
