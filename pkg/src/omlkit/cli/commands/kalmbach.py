"""`omlkit kalmbach`: K(P) for a set-labelled poset file."""

import argparse

from ...config import OutputFormat
from ...kalmbach import kalmbach_embedding, parse_poset, state_classification, verify_embedding
from ...lattice import hasse_dot, lattice_to_dict
from ..context import CommandContext
from ..schemas import KalmbachResponse
from .lattice import law_line, law_result


def cmd_kalmbach(args: argparse.Namespace, ctx: CommandContext) -> int:
    poset = parse_poset(ctx.read(args.file), ctx.source(args.file))
    lattice, embedding = kalmbach_embedding(poset)
    if ctx.format == OutputFormat.DOT:
        ctx.write(hasse_dot(lattice, name="kalmbach"))
        return 0

    report = verify_embedding(embedding)
    states = state_classification(lattice)
    if ctx.format == OutputFormat.JSON:
        ctx.write_json(KalmbachResponse(
            poset=poset.labels(),
            blocks=[b.to_dict() for b in embedding.blocks],
            mapping=embedding.mapping,
            lattice=lattice_to_dict(lattice),
            checks=[law_result(c) for c in report.checks],
            embedding_ok=report.passed,
            states=states.to_dict(),
        ))
    else:
        lines = [
            f"poset: {len(poset)} elements, {len(embedding.blocks)} maximal chain(s)",
            f"K(P): {len(lattice)} elements, {len(lattice.atoms())} atoms",
        ]
        for block in embedding.blocks:
            chain = " < ".join(block.to_dict()["chain"])
            lines.append(f"  block 2^{block.rank}: {chain}")
        lines.extend(f"φ({x}) = {y}" for x, y in embedding.mapping.items())
        lines.extend(law_line(c) for c in report.checks)
        lines.append(
            f"two-valued states: {states.count}  full: {str(states.full).lower()}"
        )
        ctx.write("\n".join(lines))

    return ctx.check_expectation(report.passed and states.full, "the embedding checks")


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    kalmbach = subparsers.add_parser("kalmbach", parents=[common], help="Kalmbach embedding of a set-labelled poset")
    kalmbach.add_argument("file", help="Poset file, one set literal per line ('-' for stdin)")
    kalmbach.set_defaults(handler=cmd_kalmbach)
