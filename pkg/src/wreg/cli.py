"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 malformed input,
3 rejected by a size cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from ._parallel import resolve_threads
from .even_connection import colon_graph_all_factorizations, colon_graph_to_json, is_even_connected
from .graph_core import Graph, whiskered_cycle
from .homology_engine import DEFAULT_CAP, SizeCapError, as_field
from .monomial_algebra import Monomial, MonomialIdeal, colon, edge_factorizations, edge_ideal, power
from .regularity import betti_table, regularity_report
from .verification import run_jobs, suite_jobs, verify_wcycle_formula

EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _emit(text: str, out: str | None = None):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_graph(path: str) -> Graph:
    try:
        return Graph.from_json(_read(path))
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"bad graph file: {exc}") from exc


def _load_ideal(path: str) -> MonomialIdeal:
    try:
        return MonomialIdeal.from_json(_read(path))
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"bad ideal file: {exc}") from exc


def cmd_graph(args) -> int:
    if args.n < 3:
        raise InputError("--n must be at least 3")
    _emit(whiskered_cycle(args.n).to_json(), args.out)
    return 0


def cmd_ideal(args) -> int:
    if args.kind == "edge":
        _emit(edge_ideal(_load_graph(args.graph)).to_json(), args.out)
    else:
        if args.s < 1:
            raise InputError("--s must be positive")
        _emit(power(_load_ideal(args.ideal), args.s).to_json(), args.out)
    return 0


def cmd_colon(args) -> int:
    i = _load_ideal(args.ideal)
    try:
        m = Monomial.parse(args.by, i.vars)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(colon(i, m).to_json(), args.out)
    return 0


def cmd_even_connect(args) -> int:
    g = _load_graph(args.graph)
    try:
        m = Monomial.parse(args.m, g.labels)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    facts = edge_factorizations(m, g, args.s)
    if not facts:
        raise InputError(f"{m} is not a product of {args.s} edges of the graph")
    if args.pair:
        try:
            u, v = (g.index(x) for x in args.pair)
        except KeyError as exc:
            raise InputError(str(exc)) from exc
        rows = []
        for f in facts:
            w = is_even_connected(g, f, u, v)
            row = {"factorization": str(f), "witness": None}
            if w is not None:
                row["witness"] = w.to_dict(g)
                row["rendered"] = w.render(g)
            rows.append(row)
        _emit(json.dumps({"pair": list(args.pair), "results": rows}, separators=(",", ":")), args.out)
        return 0
    h, squares = colon_graph_all_factorizations(g, m, args.s)
    _emit(colon_graph_to_json(h, squares), args.out)
    return 0


def cmd_reg(args) -> int:
    res = regularity_report(_load_ideal(args.ideal), as_field(args.field), threads=args.threads, cap=args.cap)
    _emit(res.to_json(), args.out)
    return 0


def cmd_betti(args) -> int:
    table = betti_table(_load_ideal(args.ideal), as_field(args.field), threads=args.threads, cap=args.cap)
    text = table.to_csv().rstrip("\n")
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    if args.kind == "wcycle":
        rep = verify_wcycle_formula(args.n, args.s, as_field(args.field), threads=args.threads, cap=args.cap)
        _emit(rep.to_json(), args.out)
        return 0 if rep.passed else EXIT_FAIL
    jobs, skipped = suite_jobs(args.seed, args.max_n, args.max_s, args.cap)
    reports = run_jobs(jobs, args.threads)
    lines = "\n".join(r.to_json() for r in reports)
    summary = sys.stdout if args.out else sys.stderr
    _emit(lines, args.out)
    for r in reports:
        print(r.summary_line(), file=summary)
    for kind, kw in skipped:
        print(f"{kind:<22} {kw} SKIPPED (size cap {args.cap})", file=summary)
    failed = sum(not r.passed for r in reports)
    print(f"{len(reports) - failed}/{len(reports)} passed", file=summary)
    return 0 if failed == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None, help="worker processes (env WREG_THREADS wins)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max (polarized) variables")
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    p = argparse.ArgumentParser(prog="wreg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("graph", parents=[common])
    g.add_argument("kind", choices=["wcycle"])
    g.add_argument("--n", type=int, required=True)
    g.set_defaults(func=cmd_graph)

    i = sub.add_parser("ideal", parents=[common])
    i.add_argument("kind", choices=["edge", "power"])
    i.add_argument("--graph")
    i.add_argument("--ideal")
    i.add_argument("--s", type=int)
    i.set_defaults(func=cmd_ideal)

    c = sub.add_parser("colon", parents=[common])
    c.add_argument("--ideal", required=True)
    c.add_argument("--by", required=True)
    c.set_defaults(func=cmd_colon)

    e = sub.add_parser("even-connect", parents=[common])
    e.add_argument("--graph", required=True)
    e.add_argument("--m", required=True)
    e.add_argument("--s", type=int, required=True)
    mode = e.add_mutually_exclusive_group()
    mode.add_argument("--pair", nargs=2, metavar=("U", "V"))
    mode.add_argument("--all", action="store_true")
    e.set_defaults(func=cmd_even_connect)

    for name, fn in (("reg", cmd_reg), ("betti", cmd_betti)):
        r = sub.add_parser(name, parents=[common])
        r.add_argument("--ideal", required=True)
        r.add_argument("--field", type=int, default=2)
        r.set_defaults(func=fn)

    v = sub.add_parser("verify", parents=[common])
    v.add_argument("kind", choices=["wcycle", "suite"])
    v.add_argument("--n", type=int)
    v.add_argument("--s", type=int)
    v.add_argument("--field", type=int, default=2)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-n", type=int, default=9)
    v.add_argument("--max-s", type=int, default=3)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.threads = resolve_threads(args.threads)
    try:
        if args.command == "ideal" and args.kind == "edge" and not args.graph:
            raise InputError("ideal edge needs --graph")
        if args.command == "ideal" and args.kind == "power" and (not args.ideal or args.s is None):
            raise InputError("ideal power needs --ideal and --s")
        if args.command == "verify" and args.kind == "wcycle" and (args.n is None or args.s is None):
            raise InputError("verify wcycle needs --n and --s")
        return args.func(args)
    except SizeCapError as exc:
        print(f"wreg: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, ValueError) as exc:
        print(f"wreg: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
