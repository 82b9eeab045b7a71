"""`omlkit states`: two-valued states of a Greechie diagram."""

import argparse

from ...config import OutputFormat
from ...lattice import greechie_dot, parse_greechie
from ...states import classify, enumerate_states, enumerate_states_brute_force, states_to_list, symmetric_seed
from ..context import CommandContext
from ..schemas import StatesResponse


def cmd_states(args: argparse.Namespace, ctx: CommandContext) -> int:
    diagram = parse_greechie(ctx.read(args.file), ctx.source(args.file))
    if ctx.format == OutputFormat.DOT:
        ctx.write(greechie_dot(diagram))
        return 0

    if args.brute_force:
        states = enumerate_states_brute_force(diagram)
    else:
        states = enumerate_states(diagram)
    classification = classify(diagram, states)
    listed = symmetric_seed(diagram, args.seed) if args.seed else states

    if ctx.format == OutputFormat.JSON:
        ctx.write_json(StatesResponse(
            atoms=list(diagram.atoms),
            contexts=[list(c) for c in diagram.contexts],
            count=classification.count,
            unital=classification.unital,
            separating=classification.separating,
            full=classification.full,
            states=states_to_list(listed),
        ))
    else:
        lines = [
            f"atoms: {len(diagram.atoms)}  contexts: {len(diagram.contexts)}",
            f"two-valued states: {classification.count}",
            f"unital: {str(classification.unital).lower()}  "
            f"separating: {str(classification.separating).lower()}  "
            f"full: {str(classification.full).lower()}",
        ]
        if args.seed:
            lines.append(f"states with {args.seed} true: {len(listed)}")
        if args.list:
            lines.extend(" ".join(s.true_atoms()) for s in listed)
        ctx.write("\n".join(lines))

    return ctx.check_expectation(classification.count > 0, "a two-valued state to exist")


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    states = subparsers.add_parser("states", parents=[common], help="Enumerate two-valued states of a Greechie diagram")
    states.add_argument("file", help="Greechie text ('-' for stdin)")
    states.add_argument("--seed", metavar="ATOM", help="Only list states in which ATOM is true")
    states.add_argument("--list", action="store_true", help="Print the true atoms of every state")
    states.add_argument("--brute-force", action="store_true", help="Use the 2^n reference enumeration")
    states.set_defaults(handler=cmd_states)
