"""Command line interface: ``mcover index|splitting|verify``.

Exit codes: 0 success, 1 usage or input error, 2 graph not [m]-coverable,
3 search budget exceeded.  ``verify`` exits 1 when a claim of kind "proved"
is refuted; conjecture and adjudication rows never change the exit code.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import lab
from .excessive import (
    DEFAULT_NODE_LIMIT,
    BudgetExceeded,
    FormulaMismatch,
    NotCoverableError,
    exact_excessive_index,
    formula_index_small_m,
    tree_index_m4,
)
from .graph import (
    Graph,
    GraphError,
    ParseError,
    build_caterpillar,
    from_edge_list,
    from_graph6,
    k6_with_pendants,
    parse_cat,
    path_graph,
    petersen_graph,
    star_graph,
)
from .matchings import matching_index
from .splitting import splitting_number

EXIT_OK, EXIT_USAGE, EXIT_NOT_COVERABLE, EXIT_BUDGET = 0, 1, 2, 3

CONSTRUCTIONS = {"k6-pendants": k6_with_pendants, "petersen": petersen_graph}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", metavar="STR", help="graph6 string")
    src.add_argument("--edge-list", metavar="FILE", help="file of 'u v' lines ('-' for stdin)")
    src.add_argument("--cat", metavar="D1,...,DT", help="caterpillar, e.g. 0,1,1,1,0 or CAT(0,1,1,1,0)")
    src.add_argument("--path", type=int, metavar="K", help="path with K edges")
    src.add_argument("--star", type=int, metavar="K", help="star K_{1,K}")
    src.add_argument("--construct", choices=sorted(CONSTRUCTIONS))


def _read_graph(args) -> Graph:
    if args.graph6 is not None:
        return from_graph6(args.graph6)
    if args.edge_list is not None:
        if args.edge_list == "-":
            return from_edge_list(sys.stdin.read())
        with open(args.edge_list, encoding="utf-8") as fh:
            return from_edge_list(fh.read())
    if args.cat is not None:
        text = args.cat if args.cat.strip().upper().startswith("CAT") else f"CAT({args.cat})"
        return build_caterpillar(parse_cat(text))
    if args.path is not None:
        if args.path < 1:
            raise GraphError("path needs at least one edge")
        return path_graph(args.path)
    if args.star is not None:
        if args.star < 1:
            raise GraphError("star needs at least one edge")
        return star_graph(args.star)
    return CONSTRUCTIONS[args.construct]()


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mcover", description="Covers of a graph's edges by matchings of fixed size m.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    pi = sub.add_parser("index", help="excessive [m]-index")
    _add_input(pi)
    pi.add_argument("--m", type=int, required=True)
    pi.add_argument("--witness", action="store_true", help="print the cover")
    pi.add_argument("--method", choices=("exact", "formula"), default="exact",
                    help="formula: closed formula for m <= 3, or m = 4 on trees")
    pi.add_argument("--format", choices=("text", "json", "csv"), default="text")
    pi.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)

    ps = sub.add_parser("splitting", help="t-splitting numbers")
    _add_input(ps)
    ps.add_argument("--m", type=int, required=True)
    ps.add_argument("--t", type=int, action="append", help="order (repeatable; default 1..m-1)")
    ps.add_argument("--format", choices=("text", "json", "csv"), default="text")

    pv = sub.add_parser("verify", help="claim suite and exhaustive sweeps")
    what = pv.add_mutually_exclusive_group(required=True)
    what.add_argument("--suite", choices=("paper",))
    what.add_argument("--trees", type=int, metavar="N", help="tree-formula sweep over trees on <= N vertices")
    what.add_argument("--graphs", type=int, metavar="N", help="general-graph sweep over connected graphs on <= N (<= 7) vertices")
    pv.add_argument("--m", type=int, default=4)
    pv.add_argument("--format", choices=("text", "json", "csv"), default="text")
    pv.add_argument("--report", metavar="FILE", help="also append JSON-lines reports to FILE")
    pv.add_argument("--workers", type=int, default=None, help="process count (default: all CPUs)")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--quick", action="store_true", help="smaller universes for the claim suite")
    pv.add_argument("--no-timing", action="store_true", help="zero the millis field for byte-stable output")
    return p


def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for r in rows:
            out.write(json.dumps(r, separators=(",", ":")) + "\n")
    elif fmt == "csv":
        if not rows:
            return
        w = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: v if isinstance(v, (str, int, float)) else json.dumps(v, separators=(",", ":"))
                        for k, v in r.items()})
    else:
        for r in rows:
            out.write("  ".join(f"{k}={v if isinstance(v, (str, int)) else json.dumps(v)}" for k, v in r.items()) + "\n")


def cmd_index(args, out) -> int:
    g = _read_graph(args)
    m = args.m
    if m < 1:
        raise ValueError("--m must be positive")
    if not matching_index(g, m).coverable():
        _emit_rows([{"m": m, "value": "INFINITE", "method": "exact-search"}], args.format, out)
        return EXIT_NOT_COVERABLE
    if args.method == "formula":
        if m <= 3:
            res = formula_index_small_m(g, m, args.node_limit)
        elif m == 4 and g.is_tree():
            res = tree_index_m4(g, args.node_limit)
        else:
            raise ValueError("closed formulas exist for m <= 3 and for m = 4 on trees")
    else:
        res = exact_excessive_index(g, m, args.node_limit, splitting_bounds=True)
    d = res.to_dict(g if args.witness else None)
    d["lower_bounds"] = dict(d["lower_bounds"])
    if "splitting" in d["lower_bounds"]:
        d["lower_bounds"]["splitting"] = {str(t): v for t, v in d["lower_bounds"]["splitting"].items()}
    if args.format == "text":
        out.write(f"value: {d['value']}\n")
        out.write(f"method: {d['method']}\n")
        lb = d["lower_bounds"]
        out.write(f"lower bounds: chromatic={lb['chromatic']} density={lb['density']}")
        for t, v in lb.get("splitting", {}).items():
            out.write(f" splitting[t={t}]={v}")
        out.write(f" max={lb['max']}\n")
        if args.witness:
            for i, ml in enumerate(d["witness"], 1):
                out.write(f"matching {i}: " + " ".join(f"{u}-{v}" for u, v in ml) + "\n")
    else:
        _emit_rows([d], args.format, out)
    return EXIT_OK


def cmd_splitting(args, out) -> int:
    g = _read_graph(args)
    m = args.m
    if m < 2:
        raise ValueError("--m must be at least 2")
    ts = args.t or list(range(1, m))
    for t in ts:
        if not 1 <= t <= m - 1:
            raise ValueError(f"--t {t} outside 1..{m - 1}")
    if not matching_index(g, m).coverable():
        _emit_rows([{"m": m, "value": "INFINITE"}], args.format, out)
        return EXIT_NOT_COVERABLE
    rows = []
    for t in ts:
        s, cert = splitting_number(g, m, t)
        rows.append({"m": m, "t": t, "s": s, "witness": g.edges_of(cert.edge_set) if cert else []})
    if args.format == "text":
        for r in rows:
            out.write(f"s^{r['t']} = {r['s']}  witness: " + " ".join(f"{u}-{v}" for u, v in r["witness"]) + "\n")
    else:
        for r in rows:
            r["witness"] = [list(e) for e in r["witness"]]
        _emit_rows(rows, args.format, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.suite:
        reports = lab.verify_paper_claims(seed=args.seed, workers=args.workers, quick=args.quick)
    elif args.trees is not None:
        if not 1 <= args.trees <= 16:
            raise ValueError("--trees must be in 1..16")
        if args.m < 2:
            raise ValueError("--m must be at least 2")
        reports = list(lab.check_tree_conjecture(args.trees, args.m, args.workers))
    else:
        if not 1 <= args.graphs <= 7:
            raise ValueError("--graphs must be in 1..7")
        reports = list(lab.check_graph_conjecture(lab.connected_graphs_atlas(args.graphs), args.m, args.workers))
    timing = not args.no_timing
    if args.report:
        lab.write_reports(reports, args.report, timing)
    if args.format == "json":
        for r in reports:
            out.write(r.to_json(timing) + "\n")
    else:
        rows = []
        for r in reports:
            d = json.loads(r.to_json(timing))
            rows.append(d)
        if args.format == "csv":
            _emit_rows(rows, "csv", out)
        else:
            for d in rows:
                out.write(f"{d['verdict']:<10} {d['claim']:<36} {d['instance']}\n")
            refuted = sum(d["verdict"] == "refuted" for d in rows)
            out.write(f"{len(rows)} reports, {refuted} refuted, {len(lab.proved_failures(reports))} refuted proved claims\n")
    return EXIT_USAGE if lab.proved_failures(reports) else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    out = sys.stdout
    handler = {"index": cmd_index, "splitting": cmd_splitting, "verify": cmd_verify}[args.command]
    try:
        return handler(args, out)
    except NotCoverableError as exc:
        print(f"mcover: {exc}", file=sys.stderr)
        return EXIT_NOT_COVERABLE
    except (ParseError, GraphError, ValueError, OSError) as exc:
        print(f"mcover: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"mcover: {exc}; proven lower bound {exc.proven_lower}", file=sys.stderr)
        return EXIT_BUDGET
    except FormulaMismatch as exc:
        print(f"mcover: formula has no witness: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
