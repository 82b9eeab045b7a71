"""`omlkit ks` and `omlkit rays ...`: the Peres configuration and orthogeneration."""

import argparse

from ...config import OutputFormat
from ...lattice import emit_greechie, greechie_dot
from ...rays import contexts, emit_rays, kochen_specker_report, ortho_closure, parse_rays
from ..context import CommandContext
from ..schemas import DiagramResponse, KochenSpeckerResponse, RaysResponse


def cmd_peres(args: argparse.Namespace, ctx: CommandContext) -> int:
    ctx.require_format(OutputFormat.TEXT, OutputFormat.JSON)
    report = kochen_specker_report()
    if ctx.format == OutputFormat.JSON:
        ctx.write_json(KochenSpeckerResponse(**report.to_dict()))
    else:
        families = ", ".join(f"{k}×{v}" for k, v in report.added_families.items())
        ctx.write("\n".join([
            f"generated rays: {report.generated} (derivation table {'matches' if report.derivation_matches else 'DIFFERS'})",
            f"after orthogeneration: {report.closure}",
            f"orthoposet elements: {report.poset_elements}",
            f"contexts: {report.contexts} ({'all triads' if report.triads_only else 'not all triads'})",
            f"added ray families: {families or 'none'}",
            f"17-generator closure matches: {str(report.seventeen_closure_matches).lower()}",
            f"two-valued states: {report.states}",
            f"verdict: {report.verdict()}",
        ]))
    return ctx.check_expectation(not report.two_valued_states_exist, "the Kochen-Specker contradiction")


def cmd_closure(args: argparse.Namespace, ctx: CommandContext) -> int:
    ctx.require_format(OutputFormat.TEXT, OutputFormat.JSON)
    rays = parse_rays(ctx.read(args.file), ctx.source(args.file))
    closed = ortho_closure(rays)
    if ctx.format == OutputFormat.JSON:
        ctx.write_json(RaysResponse(input=len(rays), count=len(closed), rays=[r.to_line() for r in closed]))
    else:
        ctx.write(emit_rays(closed))
    return 0


def cmd_contexts(args: argparse.Namespace, ctx: CommandContext) -> int:
    rays = parse_rays(ctx.read(args.file), ctx.source(args.file))
    diagram = contexts(rays, strict=not args.lenient)
    if ctx.format == OutputFormat.JSON:
        ctx.write_json(DiagramResponse(**diagram.to_dict()))
    elif ctx.format == OutputFormat.DOT:
        ctx.write(greechie_dot(diagram))
    else:
        ctx.write(emit_greechie(diagram))
    return 0


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    ks = subparsers.add_parser("ks", help="Kochen-Specker constructions")
    ks_sub = ks.add_subparsers(dest="ks_command", required=True)
    peres = ks_sub.add_parser("peres", parents=[common], help="Generate, close, extract contexts and count states")
    peres.set_defaults(handler=cmd_peres)

    rays = subparsers.add_parser("rays", help="Exact rays over Q(√2)")
    rays_sub = rays.add_subparsers(dest="rays_command", required=True)
    closure = rays_sub.add_parser("closure", parents=[common], help="Orthogenerate a ray file")
    closure.add_argument("file", help="Ray file ('-' for stdin)")
    closure.set_defaults(handler=cmd_closure)

    found = rays_sub.add_parser("contexts", parents=[common], help="Maximal orthogonal sets as a Greechie diagram")
    found.add_argument("file", help="Ray file ('-' for stdin)")
    found.add_argument("--lenient", action="store_true", help="Keep incomplete frames instead of failing")
    found.set_defaults(handler=cmd_contexts)
