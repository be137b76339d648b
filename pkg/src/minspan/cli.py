"""Command line front end: index, query, enum, check.

Exit codes: 0 success, 1 usage error, 2 runtime error. All output is
deterministic for a fixed input.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from .antichain import Antichain
from .engine import format_score, search
from .enumeration import cardinality, enumerate_lattice, level_profile, width
from .indexing import PositionalIndex, build_index
from .intervals import Universe
from .operators import join, leq, meet, pseudo_difference, rank
from .oracle import oracle_bound, oracle_crit, oracle_leq, oracle_rank, oracle_residual
from .representation import critical_intervals, relative_pseudo_complement

CHECK_OPS = ("leq", "join", "meet", "minus", "implies", "crit", "rank")
_SAMPLE_SEED = 0x5EED


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="minspan", description="Minimal-interval search and lattice tools")
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="tokenize text files into a JSON-lines index")
    p_index.add_argument("paths", nargs="+", metavar="path")
    p_index.add_argument("-o", "--output", required=True)

    p_query = sub.add_parser("query", help="run a structured query against an index")
    p_query.add_argument("indexfile")
    p_query.add_argument("--q", required=True, dest="query")
    p_query.add_argument("--snippets", type=int, default=0, metavar="K")
    p_query.add_argument("--score", action="store_true")
    p_query.add_argument("--doc", default=None, metavar="ID")

    p_enum = sub.add_parser("enum", help="enumerate and analyse the lattice on n positions")
    p_enum.add_argument("--n", type=int, required=True)
    mode = p_enum.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--levels", action="store_true")
    mode.add_argument("--width", action="store_true")
    mode.add_argument("--list", action="store_true")

    p_check = sub.add_parser("check", help="verify closed forms against the brute-force oracle")
    p_check.add_argument("--n", type=int, required=True)
    p_check.add_argument("--ops", default="all")
    p_check.add_argument("--samples", type=int, default=0,
                         help="random pair sample size (default: exhaustive)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        if args.command == "index":
            return _cmd_index(args)
        if args.command == "query":
            return _cmd_query(args)
        if args.command == "enum":
            return _cmd_enum(args)
        return _cmd_check(args)
    except BrokenPipeError:
        return 2
    except Exception as exc:  # noqa: BLE001 - single reporting point for runtime errors
        print(f"minspan: error: {exc}", file=sys.stderr)
        return 2


def _cmd_index(args: argparse.Namespace) -> int:
    docs = []
    for path in args.paths:
        p = Path(path)
        docs.append((p.name, p.read_text(encoding="utf-8")))
    index = build_index(docs)
    with open(args.output, "w", encoding="utf-8") as fh:
        index.dump_jsonl(fh)
    print(f"indexed {len(docs)} document(s) -> {args.output}")
    return 0


def _cmd_query(args: argparse.Namespace) -> int:
    with open(args.indexfile, encoding="utf-8") as fh:
        index = PositionalIndex.load_jsonl(fh)
    if args.snippets < 0:
        raise ValueError("--snippets must be nonnegative")
    results = search(index, args.query, k=args.snippets)
    if args.doc is not None:
        if args.doc not in index.docs:
            raise KeyError(f"unknown document id: {args.doc!r}")
        results = [r for r in results if r.doc_id == args.doc]
    for r in results:
        fields = [r.doc_id]
        if args.score:
            fields.append(format_score(r.score))
        if args.snippets:
            fields.append(" ".join(str(iv) for iv in r.snippets))
        print("\t".join(fields))
    return 0


def _cmd_enum(args: argparse.Namespace) -> int:
    n = args.n
    if args.levels:
        profile = level_profile(n)
        for r, count in enumerate(profile.counts):
            print(f"{r}:{count}")
    elif args.width:
        print(width(n))
    elif args.list:
        for a in enumerate_lattice(n):
            print(a)
    else:
        print(cardinality(n))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    n = args.n
    if n < 1:
        raise ValueError("--n must be positive")
    ops = CHECK_OPS if args.ops == "all" else tuple(args.ops.split(","))
    for op in ops:
        if op not in CHECK_OPS:
            raise ValueError(f"unknown op {op!r}; choose from {', '.join(CHECK_OPS)} or all")
    elements = list(enumerate_lattice(n))
    if args.samples > 0:
        rng = random.Random(_SAMPLE_SEED)
        pairs = [
            (rng.choice(elements), rng.choice(elements)) for _ in range(args.samples)
        ]
    else:
        pairs = [(a, b) for a in elements for b in elements]
    universe = Universe.bounded(n)
    failures = 0
    for op in ops:
        bad = 0
        if op in ("crit", "rank"):
            for a in elements:
                if not _agree(op, a, a, n, universe):
                    bad += 1
            label = f"{len(elements)} elements"
        else:
            for a, b in pairs:
                if not _agree(op, a, b, n, universe):
                    bad += 1
            label = f"{len(pairs)} pairs"
        if bad:
            failures += 1
            print(f"{op}: FAIL ({bad} mismatches over {label})")
        else:
            print(f"{op}: ok ({label})")
    if failures:
        print("MISMATCH")
        return 2
    print("OK")
    return 0


def _agree(op: str, a: Antichain, b: Antichain, n: int, universe: Universe) -> bool:
    if op == "leq":
        return leq(a, b) == oracle_leq(a, b, n)
    if op == "join":
        return join(a, b) == oracle_bound(a, b, n, "join")
    if op == "meet":
        return meet(a, b) == oracle_bound(a, b, n, "meet")
    if op == "minus":
        return pseudo_difference(a, b) == oracle_residual(a, b, n, "minus")
    if op == "implies":
        value = relative_pseudo_complement(a, b, universe).to_antichain()
        return value == oracle_residual(a, b, n, "implies")
    if op == "crit":
        return critical_intervals(a, universe).clamp(n) == oracle_crit(a, n)
    if op == "rank":
        return rank(a, n) == oracle_rank(a, n)
    raise AssertionError(op)


if __name__ == "__main__":
    sys.exit(main())
