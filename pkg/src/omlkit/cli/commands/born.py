"""`omlkit born ...`: Ur-operators and the trace rule."""

import argparse

from ...born import (
    born_probability,
    eigenvalues,
    expected_eigenvalues,
    loads_matrix,
    rotated_ur,
    ur_measurement_outcomes,
    ur_operator,
)
from ...config import OutputFormat
from ..context import CommandContext
from ..schemas import OutcomeModel, ProbabilityResponse, UrResponse


def _format_matrix(rows) -> str:
    def entry(z: complex) -> str:
        if abs(z.imag) < 1e-15:
            return f"{z.real:g}"
        return f"{z.real:g}{z.imag:+g}i"

    return "\n".join("  " + "  ".join(entry(z) for z in row) for row in rows)


def _ur(args: argparse.Namespace, ctx: CommandContext, rotated: bool) -> int:
    ctx.require_format(OutputFormat.TEXT, OutputFormat.JSON)
    a, b, c = args.a, args.b, args.c
    tol = ctx.settings.born.tolerance
    build = rotated_ur if rotated else ur_operator
    u = build(a, b, c, tol)
    values = eigenvalues(u)
    expected = expected_eigenvalues(a, b, c)
    outcomes = ur_measurement_outcomes(a, b, c, rotated=rotated, tolerance=tol)

    if ctx.format == OutputFormat.JSON:
        ctx.write_json(UrResponse(
            parameters=[a, b, c],
            rotated=rotated,
            matrix=u.to_json(),
            eigenvalues=values,
            expected=expected,
            outcomes=[OutcomeModel(**row.to_dict()) for row in outcomes],
        ))
    else:
        lines = [f"{'rotated ' if rotated else ''}U({a:g}, {b:g}, {c:g}) =", _format_matrix(u.data)]
        lines.append("eigenvalues: " + " ".join(f"{v:.12g}" for v in values))
        for row in outcomes:
            pattern = " ".join(f"J{i}²={v}" for i, v in enumerate(row.values, start=1))
            lines.append(f"  {row.label} = {row.eigenvalue:.12g}: {pattern}")
        ctx.write("\n".join(lines))

    close = all(abs(x - y) <= 1e-8 * max(1.0, abs(y)) for x, y in zip(values, expected))
    return ctx.check_expectation(close, "the eigenvalues to be {a+b, b+c, a+c}")


def cmd_ur(args: argparse.Namespace, ctx: CommandContext) -> int:
    return _ur(args, ctx, rotated=False)


def cmd_rotated(args: argparse.Namespace, ctx: CommandContext) -> int:
    return _ur(args, ctx, rotated=True)


def cmd_probability(args: argparse.Namespace, ctx: CommandContext) -> int:
    ctx.require_format(OutputFormat.TEXT, OutputFormat.JSON)
    tol = ctx.settings.born.tolerance
    rho = loads_matrix(ctx.read(args.rho), tol, ctx.source(args.rho))
    e = loads_matrix(ctx.read(args.projector), tol, ctx.source(args.projector))
    p = born_probability(rho, e, tol)
    if ctx.format == OutputFormat.JSON:
        ctx.write_json(ProbabilityResponse(probability=p, tolerance=tol))
    else:
        ctx.write(f"{p:.12g}")
    return 0


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    born = subparsers.add_parser("born", help="Born rule and Ur-operators")
    sub = born.add_subparsers(dest="born_command", required=True)

    for name, handler, text in (
        ("ur", cmd_ur, "U = aJ₁² + bJ₂² + cJ₃² with its eigenvalues and outcome table"),
        ("rotated", cmd_rotated, "The Ur-operator in the rotated frame"),
    ):
        parser = sub.add_parser(name, parents=[common], help=text)
        parser.add_argument("a", type=float)
        parser.add_argument("b", type=float)
        parser.add_argument("c", type=float)
        parser.set_defaults(handler=handler)

    prob = sub.add_parser("probability", parents=[common], help="trace(ρE) for JSON matrix files")
    prob.add_argument("rho", help="Density matrix JSON ('-' for stdin)")
    prob.add_argument("projector", help="Projector JSON")
    prob.set_defaults(handler=cmd_probability)
