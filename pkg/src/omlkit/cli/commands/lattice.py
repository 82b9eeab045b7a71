"""`omlkit lattice ...`: law checks, MO_n construction and Hasse diagrams."""

import argparse
import logging
from typing import List

from ...config import OutputFormat
from ...lattice import (
    BoundedLattice,
    OrthoLattice,
    LawReport,
    check_laws,
    check_ortholattice_identities,
    from_greechie,
    greechie_dot,
    hasse_dot,
    implication_chain,
    lattice_to_dict,
    loads_lattice,
    mo,
    parse_greechie,
)
from ...lattice.io import looks_like_json
from ..context import CommandContext
from ..schemas import LatticeCheckResponse, LawResult

logger = logging.getLogger(__name__)

LAWS = ("distributive", "modular", "orthomodular")


def load_lattice_from_text(text: str, source: str) -> BoundedLattice:
    """A lattice JSON document, or a Greechie diagram to paste."""
    if looks_like_json(text):
        return loads_lattice(text, source)
    return from_greechie(parse_greechie(text, source))


def load_lattice(ctx: CommandContext, path: str) -> BoundedLattice:
    return load_lattice_from_text(ctx.read(path), ctx.source(path))


def law_result(report: LawReport) -> LawResult:
    return LawResult(
        law=report.law,
        holds=report.holds,
        statement=report.statement,
        witness=list(report.witness) if report.witness else None,
        lhs=report.lhs,
        rhs=report.rhs,
    )


def law_line(report: LawReport) -> str:
    line = f"{report.law}: {str(report.holds).lower()}"
    if not report.holds and report.witness:
        line += f"  witness ({', '.join(report.witness)})"
        if report.lhs is not None:
            line += f": {report.lhs} ≠ {report.rhs}"
    return line


def cmd_check(args: argparse.Namespace, ctx: CommandContext) -> int:
    ctx.require_format(OutputFormat.TEXT, OutputFormat.JSON)
    lattice = load_lattice(ctx, args.file)
    reports = check_laws(lattice)
    identities = check_ortholattice_identities(lattice) if isinstance(lattice, OrthoLattice) else []
    if not implication_chain(reports):
        logger.warning("Law results break distributive ⇒ modular ⇒ orthomodular")

    if ctx.format == OutputFormat.JSON:
        ctx.write_json(LatticeCheckResponse(
            name=lattice.name,
            size=len(lattice),
            laws=[law_result(r) for r in reports],
            identities=[law_result(r) for r in identities],
        ))
    else:
        lines = [f"lattice: {lattice.name or 'unnamed'} ({len(lattice)} elements)"]
        lines.extend(law_line(r) for r in reports)
        failed_identities = [r for r in identities if not r.holds]
        if identities:
            lines.append(f"ortholattice identities: {'ok' if not failed_identities else 'violated'}")
            lines.extend("  " + law_line(r) for r in failed_identities)
        ctx.write("\n".join(lines))

    selected: List[LawReport] = [r for r in reports if not args.law or r.law in args.law]
    return ctx.check_expectation(all(selected), "the selected laws")


def emit_lattice(ctx: CommandContext, lattice: BoundedLattice) -> None:
    """DOT when asked for, otherwise the lattice JSON document (so output pipes into `lattice check -`)."""
    if ctx.format == OutputFormat.DOT:
        ctx.write(hasse_dot(lattice))
    else:
        ctx.write_json(lattice_to_dict(lattice))


def cmd_mo(args: argparse.Namespace, ctx: CommandContext) -> int:
    emit_lattice(ctx, mo(args.n))
    return 0


def cmd_dot(args: argparse.Namespace, ctx: CommandContext) -> int:
    text = ctx.read(args.file)
    if args.diagram and not looks_like_json(text):
        ctx.write(greechie_dot(parse_greechie(text, ctx.source(args.file))))
        return 0
    ctx.write(hasse_dot(load_lattice_from_text(text, ctx.source(args.file))))
    return 0


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    lattice = subparsers.add_parser("lattice", help="Ortholattice law checks and constructions")
    sub = lattice.add_subparsers(dest="lattice_command", required=True)

    check = sub.add_parser("check", parents=[common], help="Check distributive/modular/orthomodular laws")
    check.add_argument("file", help="Lattice JSON or Greechie text ('-' for stdin)")
    check.add_argument("--law", action="append", choices=LAWS,
                       help="Law(s) that --expect refers to (default: all)")
    check.set_defaults(handler=cmd_check)

    build = sub.add_parser("mo", parents=[common], help="Emit MO_n")
    build.add_argument("n", type=int)
    build.set_defaults(handler=cmd_mo)

    dot = sub.add_parser("dot", parents=[common], help="Hasse (or Greechie) diagram as DOT")
    dot.add_argument("file", help="Lattice JSON or Greechie text ('-' for stdin)")
    dot.add_argument("--diagram", action="store_true", help="Draw the Greechie diagram instead of the Hasse diagram")
    dot.set_defaults(handler=cmd_dot)
