"""Command-line entry point: ``dtknots {knot,table,twist,oracle,verify}``."""
from __future__ import annotations

import argparse
import json
import sys

from .acceptance import run_suite
from .bridge import RangeError
from .lattice import DEFAULT_NODE_BUDGET, MAX_RANK, OracleBudgetExceeded, embed_gram, jk_form
from .report import RENDERERS, build_table, genus_report
from .twist import primitive_t_search

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def cmd_knot(args) -> int:
    rep = genus_report(args.m, args.n)
    if args.format == "json":
        print(json.dumps(rep.to_dict(), indent=1))
    else:
        print(rep.to_text())
    return EXIT_OK


def cmd_table(args) -> int:
    reports = build_table(args.m_max, args.n_min, args.n_max, workers=args.threads)
    sys.stdout.write(RENDERERS[args.format](reports))
    return EXIT_OK


def cmd_twist(args) -> int:
    results = primitive_t_search(args.t_max, args.variant)
    if args.format == "json":
        rows = [{"t": r.t, "variant": r.variant, "j": list(r.j_set)} for r in results]
        print(json.dumps(rows, indent=1))
    else:
        for r in results:
            prefix = "" if args.variant else f"{r.variant} "
            print(f"{prefix}{r.t}: {','.join(map(str, r.j_set))}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    form, rank = jk_form((args.m, args.n), args.case, args.epsilon)
    try:
        witness = embed_gram(form, rank, node_budget=args.node_budget, max_rank=args.max_rank)
    except OracleBudgetExceeded as exc:
        print(f"gave up: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    if witness is None:
        print(f"no embedding into rank {rank}")
    else:
        print(f"embedding into rank {rank}:")
        for row in witness.rows:
            print("  " + " ".join(f"{v:3d}" for v in row))
    return EXIT_OK


def cmd_verify(args) -> int:
    level = "full" if args.full else "fast"
    failed = False
    try:
        for res in run_suite(level, full_range=args.full_range):
            print(res.line(), flush=True)
            failed |= not res.passed
    except (OracleBudgetExceeded, MemoryError) as exc:
        print(f"resource exhausted: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dtknots", description="gamma_4 bounds for double twist knots C(m,n).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("knot", help="full report for one knot")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_knot)

    p = sub.add_parser("table", help="grid of values over m and even n")
    p.add_argument("--m-max", type=int, default=20)
    p.add_argument("--n-min", type=int, default=-20)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--format", choices=tuple(RENDERERS), default="csv")
    p.add_argument("--threads", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("twist", help="primitive moduli and j-sets for the twist knot families")
    p.add_argument("--t-max", type=int, default=1000)
    p.add_argument("--variant", choices=("A", "B"))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("oracle", help="decide one lattice embedding by exhaustive search")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--case", type=int, choices=(1, 2, 3, 4), default=1)
    p.add_argument("--epsilon", type=int, choices=(1, -1), default=1)
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--max-rank", type=int, default=MAX_RANK, help="largest form rank accepted")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--full", action="store_true", help="all criteria instead of the fast subset")
    p.add_argument("--full-range", action="store_true",
                   help="run the residue comparison up to 300 instead of 100")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RangeError) as exc:
        print(f"dtknots {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
