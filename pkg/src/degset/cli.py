"""Command-line front end.

    degset lq 5,4,3 [--method auto|closed|search|oracle] [--witness] [--dot] [--limit N]
    degset check 5,4,3^5
    degset pad 5,2
    degset realize 2,2,2 [--edge-list]
    degset approx 5,4,3
    degset table 8
    degset batch sets.txt

``--json-lines`` (before the subcommand) switches every command to one JSON
object per line. Exit codes: 0 ok, 1 parse error, 2 limit exceeded,
3 forced method not applicable.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional

from .closedform import closed_form, interval_branch, lq_interval
from .core import (
    DEFAULT_LIMITS,
    DegreeSequence,
    DegreeSet,
    Graph,
    Limits,
    LqOutcome,
    parse_sequence,
    parse_set,
)
from .errors import DegsetError, LimitExceeded, NotApplicable, ParseError
from .graphicality import first_violation, is_graphic
from .padding import min_padding
from .realization import realize
from .solver import approx_sequence, lq_exact, oracle_outcome, search_window

EXIT_OK, EXIT_PARSE, EXIT_LIMIT, EXIT_NOT_APPLICABLE = 0, 1, 2, 3

# Frozen field names of the structured records.
LQ_FIELDS = ("set", "lq", "method", "witness", "edges")
TABLE_FIELDS = ("m", "n", "lq", "branch")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, LimitExceeded):
        return EXIT_LIMIT
    if isinstance(exc, NotApplicable):
        return EXIT_NOT_APPLICABLE
    return EXIT_PARSE


def _relabel(g: Graph, seed: Optional[int]) -> Graph:
    if seed is None:
        return g
    perm = list(range(g.vertex_count))
    random.Random(seed).shuffle(perm)
    return Graph(g.vertex_count, ((perm[u], perm[v]) for u, v in g.edges))


def solve(d: DegreeSet, method: str = "auto", limit: Optional[int] = None,
          with_graph: bool = False) -> LqOutcome:
    """Dispatch a query the way ``degset lq`` does."""
    limits = Limits(max_sigma=limit) if limit is not None else DEFAULT_LIMITS
    if method == "closed":
        return closed_form(d, with_graph)
    if method == "search":
        return lq_exact(d, with_graph, limits=limits)
    if method == "oracle":
        return oracle_outcome(d, max_sigma=limit, with_graph=with_graph)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    try:
        return closed_form(d, with_graph)
    except NotApplicable:
        return lq_exact(d, with_graph, limits=limits)


def outcome_record(out: LqOutcome, include_edges: bool = False) -> dict:
    rec = {
        "set": list(out.degree_set.degrees),
        "lq": out.lq,
        "method": out.method,
        "witness": [list(r) for r in out.witness.runs],
    }
    if include_edges and out.graph is not None:
        rec["edges"] = [list(e) for e in out.graph.sorted_edges()]
    return rec


def record_to_outcome(rec: dict) -> LqOutcome:
    """Inverse of :func:`outcome_record`; validates the record on the way."""
    graph = None
    witness = DegreeSequence(tuple(r) for r in rec["witness"])
    if "edges" in rec:
        graph = Graph(witness.p, (tuple(e) for e in rec["edges"]))
    return LqOutcome(DegreeSet(rec["set"]), rec["lq"], witness, rec["method"], graph)


def _emit(args, record: dict, text: str) -> None:
    if args.json_lines:
        print(json.dumps(record, separators=(",", ":")))
    else:
        print(text)


def _lq_text(out: LqOutcome, args) -> str:
    lines = [f"set: {out.degree_set}", f"lq: {out.lq}", f"method: {out.method}",
             f"witness: {out.witness}"]
    if out.graph is not None:
        if args.dot:
            lines.append(out.graph.to_dot().rstrip("\n"))
        else:
            lines.append("edges:")
            lines.append(out.graph.to_edge_list().rstrip("\n"))
    return "\n".join(lines)


def _query(args, text: str) -> LqOutcome:
    d = parse_set(text)
    want_graph = args.witness or args.dot
    out = solve(d, args.method, args.limit, with_graph=want_graph)
    if out.graph is not None and args.seed is not None:
        out = LqOutcome(out.degree_set, out.lq, out.witness, out.method,
                        _relabel(out.graph, args.seed))
    return out


def cmd_lq(args) -> int:
    out = _query(args, args.set)
    _emit(args, outcome_record(out, include_edges=True), _lq_text(out, args))
    return EXIT_OK


def cmd_check(args) -> int:
    s = parse_sequence(args.sequence)
    graphic = is_graphic(s)
    violation = None if graphic else first_violation(s)
    odd = s.sigma % 2 == 1
    record = {"sequence": [list(r) for r in s.runs], "graphic": graphic, "odd_sum": odd,
              "violation": None if violation is None else {"k": violation[0], "delta": violation[1]}}
    reasons = []
    if violation is not None:
        reasons.append(f"violated at k={violation[0]}, delta={violation[1]}")
    if odd:
        reasons.append(f"odd degree sum {s.sigma}")
    text = "graphic" if graphic else "not graphic: " + "; ".join(reasons)
    _emit(args, record, text)
    return EXIT_OK


def cmd_pad(args) -> int:
    d = parse_set(args.set)
    pad = min_padding(d)
    record = {"set": list(d.degrees), "case": pad.case, "c": pad.c, "k_star": pad.k_star,
              "C_star": pad.C_star, "base": [list(r) for r in pad.base.runs],
              "padded": [list(r) for r in pad.padded.runs]}
    text = "\n".join([f"C*={pad.C_star}", f"c={pad.c} k*={pad.k_star}", f"case: {pad.case}",
                      f"base: {pad.base}", f"padded: {pad.padded}"])
    _emit(args, record, text)
    return EXIT_OK


def cmd_realize(args) -> int:
    s = parse_sequence(args.sequence)
    g = _relabel(realize(s), args.seed)
    record = {"sequence": [list(r) for r in s.runs], "vertex_count": g.vertex_count,
              "edges": [list(e) for e in g.sorted_edges()]}
    text = g.to_edge_list().rstrip("\n") if args.edge_list else g.to_dot().rstrip("\n")
    _emit(args, record, text)
    return EXIT_OK


def cmd_approx(args) -> int:
    d = parse_set(args.set)
    s_bar = approx_sequence(d)
    window = search_window(d)
    record = {"set": list(d.degrees), "approx": [list(r) for r in s_bar.runs],
              "sigma": s_bar.sigma, "window": [window.lo_exclusive, window.hi_inclusive],
              "gap_bound": d.min - 1}
    text = "\n".join([f"approx: {s_bar}", f"sigma: {s_bar.sigma}", f"window: {window}",
                      f"gap <= {d.min - 1}"])
    _emit(args, record, text)
    return EXIT_OK


_BRANCH_MARK = {"singleton": "=", "small": "s", "large": "L"}


def table_rows(max_n: int) -> list[list[dict]]:
    rows = []
    for n in range(1, max_n + 1):
        row = []
        for m in range(1, n + 1):
            row.append({"m": m, "n": n, "lq": lq_interval(m, n).lq,
                        "branch": interval_branch(m, n)})
        rows.append(row)
    return rows


def cmd_table(args) -> int:
    if args.max_n < 1:
        raise ParseError("max-n must be positive")
    DEFAULT_LIMITS.check_degree(args.max_n)
    rows = table_rows(args.max_n)
    if args.json_lines:
        for row in rows:
            for cell in row:
                print(json.dumps(cell, separators=(",", ":")))
        return EXIT_OK
    print("lq([m,n]) for m = 1..n   (s: small-minimum branch, L: large-minimum branch, =: singleton)")
    for row in rows:
        cells = " ".join(f"{c['lq']:>4}{_BRANCH_MARK[c['branch']]}" for c in row)
        print(f"n={row[0]['n']:>3} |{cells}")
    return EXIT_OK


def cmd_batch(args) -> int:
    stream = sys.stdin if args.file == "-" else open(args.file, encoding="utf-8")
    worst = EXIT_OK
    with stream:
        for line in stream:
            line = line.rstrip("\n")
            try:
                out = _query(args, line)
            except DegsetError as exc:
                code = _exit_code(exc)
                worst = worst or code
                record = {"set": line, "error": str(exc), "exit": code}
                _emit(args, record, f"{line}: error: {exc}")
                continue
            rec = outcome_record(out, include_edges=True)
            _emit(args, rec, f"{out.degree_set}: lq={out.lq} method={out.method} witness={out.witness}")
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="degset", description="Least size of a graph with a given degree set.")
    parser.add_argument("--json-lines", action="store_true", help="one JSON record per line")
    parser.add_argument("--seed", type=int, default=None,
                        help="relabel witness graphs by a seeded random permutation")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def query_flags(p):
        p.add_argument("--method", choices=["auto", "closed", "search", "oracle"], default="auto")
        p.add_argument("--witness", action="store_true", help="also print a realizing graph")
        p.add_argument("--dot", action="store_true", help="print the witness graph as DOT")
        p.add_argument("--limit", type=int, default=None, metavar="MAX_SIGMA",
                       help="largest degree total the search may examine")

    p = sub.add_parser("lq", help="least size for a degree set")
    p.add_argument("set")
    query_flags(p)
    p.set_defaults(func=cmd_lq)

    p = sub.add_parser("check", help="graphicality of a degree sequence")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("pad", help="minimal padding of the one-copy sequence")
    p.add_argument("set")
    p.set_defaults(func=cmd_pad)

    p = sub.add_parser("realize", help="build a graph with the given degree sequence")
    p.add_argument("sequence")
    p.add_argument("--dot", action="store_true", help="DOT output (the default)")
    p.add_argument("--edge-list", action="store_true", help="'u v' lines instead of DOT")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("approx", help="approximation sequence and search window")
    p.add_argument("set")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("table", help="table of lq([m,n]) for 1 <= m <= n <= MAX_N")
    p.add_argument("max_n", type=int, metavar="MAX_N")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("batch", help="one degree set per line; '-' reads stdin")
    p.add_argument("file")
    query_flags(p)
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except DegsetError as exc:
        print(f"degset: {exc}", file=sys.stderr)
        return _exit_code(exc)
    except OSError as exc:
        print(f"degset: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
