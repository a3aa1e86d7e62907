"""
Command-line front end.

Exit codes: 0 ok, 1 input error, 2 flagged fallback output, 3 oracle limit,
4 not equivalent.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .errors import InputError, OracleLimitError
from .graph import Exact, MatchingApprox, emit_dimacs, gnp, parse_dimacs
from .instance import ORACLE_LIMIT, decide_bruteforce, deserialize, serialize
from .pipeline import PipelineConfig, compress, stream, verify_equivalence

EXIT_OK, EXIT_INPUT, EXIT_FALLBACK, EXIT_ORACLE, EXIT_MISMATCH = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors (exit 1); exit 2 means fallback output
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _epsilon(text: str) -> Fraction:
    eps = _fraction(text)
    if not 0 < eps < 1:
        raise argparse.ArgumentTypeError(f"epsilon must lie in (0, 1), got {text}")
    return eps


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return v


def _seed(text: str) -> int:
    v = _nonneg(text)
    if v >= 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rankvc", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compress", help="compress a DIMACS graph into an RVC1 instance")
    p.add_argument("--input", required=True, type=Path)
    p.add_argument("--k", required=True, type=_nonneg)
    p.add_argument("--epsilon", default=Fraction(1, 20), type=_epsilon)
    p.add_argument("--seed", required=True, type=_seed)
    p.add_argument("--mode", choices=("fast", "faithful"), default="fast")
    p.add_argument("--vc", choices=("exact", "matching"), default="exact")
    p.add_argument("--out", required=True, type=Path)
    p.add_argument("--report", type=Path)
    p.add_argument("--no-shortcut", action="store_true",
                   help="always run the reductions, even when k <= log2 n")

    p = sub.add_parser("decide", help="decide an RVC1 instance by brute force")
    p.add_argument("--input", required=True, type=Path)
    p.add_argument("--limit", type=_nonneg, default=ORACLE_LIMIT)

    p = sub.add_parser("verify", help="check an RVC1 instance against (graph, k)")
    p.add_argument("--graph", required=True, type=Path)
    p.add_argument("--k", required=True, type=_nonneg)
    p.add_argument("--instance", required=True, type=Path)
    p.add_argument("--limit", type=_nonneg, default=ORACLE_LIMIT)

    p = sub.add_parser("gen", help="emit a random graph in DIMACS format")
    p.add_argument("--model", choices=("gnp",), default="gnp")
    p.add_argument("--n", required=True, type=_nonneg)
    p.add_argument("--p", required=True, type=_fraction)
    p.add_argument("--seed", required=True, type=_seed)
    p.add_argument("--out", type=Path)

    p = sub.add_parser("stats", help="print size statistics of an RVC1 instance")
    p.add_argument("--input", required=True, type=Path)
    return parser


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _write(path: Path, text: str) -> None:
    try:
        path.write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror or exc}") from None


def instance_stats(inst) -> str:
    rep = inst.matroid.rep
    lines = [f"domain={rep.domain}", f"n={inst.graph.n}", f"m={inst.graph.m}",
             f"rows={rep.nrows}", f"rank={inst.matroid.rank}", f"budget={inst.budget}",
             f"max_entry_bits={rep.max_entry_bits()}",
             f"isolated={len(inst.graph.isolated())}"]
    return "\n".join(lines) + "\n"


def _cmd_compress(args) -> int:
    g = parse_dimacs(_read(args.input))
    cfg = PipelineConfig(epsilon=args.epsilon, mode=args.mode,
                         vc_strategy=Exact() if args.vc == "exact" else MatchingApprox(),
                         seed=args.seed, shortcut=not args.no_shortcut)
    out, report = compress(g, args.k, cfg)
    _write(args.out, serialize(out))
    if args.report:
        _write(args.report, report.to_text())
    if report.failed:
        print(f"randomized step failed, wrote fallback instance: {report.failure}",
              file=sys.stderr)
        return EXIT_FALLBACK
    return EXIT_OK


def _cmd_decide(args) -> int:
    inst = deserialize(_read(args.input))
    print("YES" if decide_bruteforce(inst, args.limit) else "NO")
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = parse_dimacs(_read(args.graph))
    inst = deserialize(_read(args.instance))
    if verify_equivalence(g, args.k, inst, args.limit):
        print("EQUIVALENT")
        return EXIT_OK
    print("NOT EQUIVALENT")
    return EXIT_MISMATCH


def _cmd_gen(args) -> int:
    text = emit_dimacs(gnp(args.n, args.p, stream(args.seed, "graph")))
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_stats(args) -> int:
    sys.stdout.write(instance_stats(deserialize(_read(args.input))))
    return EXIT_OK


COMMANDS = {"compress": _cmd_compress, "decide": _cmd_decide, "verify": _cmd_verify,
            "gen": _cmd_gen, "stats": _cmd_stats}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except OracleLimitError as exc:
        print(f"rankvc: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except InputError as exc:
        print(f"rankvc: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
