"""`omlkit polytope ...`: facets and classicality of correlation polytopes."""

import argparse

from ...config import OutputFormat
from ...polytope import (
    Inequality,
    emit_facets,
    facets,
    is_classical,
    parse_scheme,
    parse_vector,
    vertices,
)
from ..context import CommandContext
from ..schemas import FacetsResponse, InequalityModel, MembershipResponse, WeightModel


def _inequality(f: Inequality, names) -> InequalityModel:
    return InequalityModel(coeffs=list(f.coeffs), bound=f.bound, text=f.pretty(names))


def cmd_facets(args: argparse.Namespace, ctx: CommandContext) -> int:
    ctx.require_format(OutputFormat.TEXT, OutputFormat.JSON)
    scheme = parse_scheme(ctx.read(args.file), ctx.source(args.file))
    points = vertices(scheme)
    poly = facets(points)
    names = scheme.term_names()
    if ctx.format == OutputFormat.JSON:
        ctx.write_json(FacetsResponse(
            terms=names,
            vertices=len(points),
            dimension=poly.dimension,
            facets=[_inequality(f, names) for f in poly.inequalities],
            equations=[_inequality(f, names) for f in poly.equations],
        ))
    elif args.pretty:
        ctx.write("\n".join(f.pretty(names) for f in poly.equations + poly.inequalities))
    else:
        ctx.write(emit_facets(poly, scheme))
    return 0


def cmd_member(args: argparse.Namespace, ctx: CommandContext) -> int:
    ctx.require_format(OutputFormat.TEXT, OutputFormat.JSON)
    scheme = parse_scheme(ctx.read(args.file), ctx.source(args.file))
    vector = parse_vector(args.vector)
    result = is_classical(vector, scheme)
    names = scheme.term_names()

    if ctx.format == OutputFormat.JSON:
        ctx.write_json(MembershipResponse(
            terms=names,
            vector=[str(x) for x in vector],
            classical=result.classical,
            weights=[WeightModel(vertex=list(v), weight=str(w)) for v, w in result.weights.items()],
            violated=_inequality(result.violated, names) if result.violated else None,
            value=str(result.violation) if result.violation is not None else None,
        ))
    elif result.classical:
        lines = ["classical: true"]
        lines.extend(f"  {w}  {' '.join(str(x) for x in v)}" for v, w in result.weights.items())
        ctx.write("\n".join(lines))
    else:
        lines = ["classical: false"]
        if result.violated is not None:
            lines.append(f"violated: {result.violated.pretty(names)}  (value {result.violation})")
        ctx.write("\n".join(lines))

    return ctx.check_expectation(result.classical, "the vector to be classical")


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    polytope = subparsers.add_parser("polytope", help="Correlation polytopes")
    sub = polytope.add_subparsers(dest="polytope_command", required=True)

    found = sub.add_parser("facets", parents=[common], help="Exact facets of a scheme's correlation polytope")
    found.add_argument("file", help="Scheme file ('-' for stdin)")
    found.add_argument("--pretty", action="store_true", help="Write inequalities with term names")
    found.set_defaults(handler=cmd_facets)

    member = sub.add_parser("member", parents=[common], help="Is a probability vector classical?")
    member.add_argument("file", help="Scheme file ('-' for stdin)")
    member.add_argument("vector", help="Rationals in term order, e.g. 1/2,1/2,1/4")
    member.set_defaults(handler=cmd_member)
