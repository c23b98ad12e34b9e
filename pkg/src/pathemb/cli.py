"""Command-line interface: ``pathemb <command> ...``.

Decision commands print ``yes`` or ``no``.  Input errors exit with code 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .analysis import alternating_tail_constant, analyze, classify
from .families import gen_family
from .io import FormatError, dump_structure, read_graph, read_structure, write_structure
from .reductions import family_supply, reduce_longshort, reduce_ustcon
from .solvers.brute import brute_force_embedding
from .solvers.colour_coding import DEFAULT_K_MAX, algorithm_AC
from .solvers.paths import LongShortInstance, solve_longshort, solve_ustcon
from .solvers.tails import algorithm_B
from .structures import StructureError, as_rooted_path
from .verify import METHODS, VerificationConfig, run_verification

EXIT_INPUT_ERROR = 2


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--seed", type=int, default=default(1), help="random seed (default 1)")
    parser.add_argument(
        "--k-max", type=int, default=default(DEFAULT_K_MAX),
        help="colour-coding cap: more colours than k_max - 1 fall back to brute force",
    )
    parser.add_argument(
        "--log-base-multiplier", type=float, default=default(1.0),
        help="scale factor on the prime bound of the hash family",
    )


def _sizes(text: str) -> list[int]:
    """'3..10' or '5,9'."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",") if x]


def _family_name(text: str) -> int:
    name = text.removeprefix("family")
    if name not in {"1", "2", "3", "4"}:
        raise argparse.ArgumentTypeError(f"expected family1..family4, got {text!r}")
    return int(name)


def _vertex(text: str) -> int:
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathemb", description="Embedding of rooted path structures: analysis, solvers, reductions."
    )
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="structural report for rooted path structures")
    p.add_argument("files", nargs="+", help="structure JSON files")

    p = sub.add_parser("classify", parents=[common], help="apply the dichotomy to a finite sample")
    p.add_argument("files", nargs="*", help="structure JSON files")
    p.add_argument("--family", type=_family_name, help="generate the sample from a family (1-4)")
    p.add_argument("--sizes", type=_sizes, help="sizes for --family, e.g. 3..10 or 5,9")
    p.add_argument("--bound", type=int, required=True)

    solve = sub.add_parser("solve", help="decision procedures").add_subparsers(dest="problem", required=True)
    p = solve.add_parser("emb", parents=[common], help="does P embed into B?")
    p.add_argument("P")
    p.add_argument("B")
    p.add_argument("--method", choices=("brute", "ac", "tail"), default="brute")
    p.add_argument("--C", type=int, help="tail constant for --method tail (default: computed)")
    p = solve.add_parser("longshort", parents=[common], help="long path at s or exact s-t path")
    p.add_argument("G")
    p.add_argument("s", type=_vertex)
    p.add_argument("t", type=_vertex)
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p = solve.add_parser("ustcon", parents=[common], help="s-t path of length at most l")
    p.add_argument("G")
    p.add_argument("s", type=_vertex)
    p.add_argument("t", type=_vertex)
    p.add_argument("l", type=int)

    red = sub.add_parser("reduce", help="reductions to embedding").add_subparsers(dest="reduction", required=True)
    p = red.add_parser("ustcon-to-emb", parents=[common])
    p.add_argument("G")
    p.add_argument("s", type=_vertex)
    p.add_argument("t", type=_vertex)
    p.add_argument("l", type=int)
    p.add_argument("--family", type=_family_name, required=True)
    p.add_argument("--case", type=int, choices=(1, 2), required=True)
    p.add_argument("-o", nargs=2, metavar=("P.json", "B.json"), required=True)
    p = red.add_parser("longshort-to-emb", parents=[common])
    p.add_argument("G")
    p.add_argument("s", type=_vertex)
    p.add_argument("t", type=_vertex)
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    p.add_argument("-o", nargs=2, metavar=("P.json", "Bprime.json"), required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a family member")
    p.add_argument("family", type=_family_name, help="family1..family4")
    p.add_argument("size", type=int)
    p.add_argument("-o", metavar="P.json", help="output file (default: stdout)")

    p = sub.add_parser("verify", parents=[common], help="seeded cross-checks against brute force")
    p.add_argument("--count", type=int, default=10, help="instances per check")
    p.add_argument("--max-k", type=int, default=5)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--families", default="1,2,3,4,Pkl")
    p.add_argument("--methods", default=",".join(METHODS))
    p.add_argument("--timings", action="store_true", help="include per-check timings in the report")
    p.add_argument("-o", metavar="report.json", help="output file (default: stdout)")
    return parser


def _emit_decision(answer: bool) -> int:
    print("yes" if answer else "no")
    return 0


def _read_path(path: str):
    return as_rooted_path(read_structure(path))


def cmd_analyze(args) -> int:
    reports = [analyze(_read_path(f)).to_dict() for f in args.files]
    print(json.dumps(reports[0] if len(reports) == 1 else reports, indent=2))
    return 0


def cmd_classify(args) -> int:
    sample = [_read_path(f) for f in args.files]
    if args.family is not None:
        sample += [gen_family(args.family, n) for n in (args.sizes or [])]
    print(json.dumps(classify(sample, args.bound).to_dict(), indent=2))
    return 0


def cmd_solve(args) -> int:
    if args.problem == "emb":
        B = read_structure(args.B)
        if args.method == "brute":
            return _emit_decision(brute_force_embedding(read_structure(args.P), B) is not None)
        P = _read_path(args.P)
        if args.method == "ac":
            return _emit_decision(
                algorithm_AC(P, B, k_max=args.k_max, multiplier=args.log_base_multiplier)
            )
        C = args.C if args.C is not None else alternating_tail_constant(P)
        return _emit_decision(
            algorithm_B(P, B, C, k_max=args.k_max, multiplier=args.log_base_multiplier)
        )
    G = read_graph(args.G)
    if args.problem == "longshort":
        return _emit_decision(solve_longshort(LongShortInstance(G, args.s, args.t, args.k, args.l)))
    return _emit_decision(solve_ustcon(G, args.s, args.t, args.l))


def cmd_reduce(args) -> int:
    G = read_graph(args.G)
    if args.reduction == "ustcon-to-emb":
        P, B = reduce_ustcon(G, args.s, args.t, args.l, family_supply(args.family), args.case)
    else:
        P, B = reduce_longshort(G, args.s, args.t, args.k, args.l)
    write_structure(P.base, args.o[0])
    write_structure(B, args.o[1])
    return 0


def cmd_gen(args) -> int:
    P = gen_family(args.family, args.size)
    if args.o:
        write_structure(P.base, args.o)
    else:
        sys.stdout.write(dump_structure(P.base))
    return 0


def cmd_verify(args) -> int:
    cfg = VerificationConfig(
        seed=args.seed,
        instance_count=args.count,
        max_k=args.max_k,
        max_n=args.max_n,
        families=tuple(x for x in args.families.split(",") if x),
        methods=tuple(x for x in args.methods.split(",") if x),
        k_max=args.k_max,
        multiplier=args.log_base_multiplier,
    )
    report = run_verification(cfg)
    text = report.to_json(timings=args.timings)
    if args.o:
        with open(args.o, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for check in report.checks:
        print(f"{check.name}: {check.seconds:.3f}s", file=sys.stderr)
    return 0 if report.ok else 1


COMMANDS = {
    "analyze": cmd_analyze,
    "classify": cmd_classify,
    "solve": cmd_solve,
    "reduce": cmd_reduce,
    "gen": cmd_gen,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (StructureError, FormatError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
