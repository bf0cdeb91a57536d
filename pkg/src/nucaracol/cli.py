"""Command-line front end: ``nucaracol {build,triangulate,count,report}``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .caracol import CaracolGraph
from .framing import cliques_to_json, dual_graph, length_framing, maximal_cliques, planar_framing
from .paths import LatticePath, PathSyntaxError, normalize, parse_path

SCHEMA = "1"


def _emit(payload: dict, stream=None) -> None:
    stream = stream or sys.stdout
    stream.write(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True) + "\n")


def _read_nu(text: str) -> LatticePath:
    nu = parse_path(text)
    if not nu.starts_with_north:
        fixed = normalize(nu)
        print(f"note: {nu} does not start with N; using {fixed}", file=sys.stderr)
        return fixed
    return nu


def _framing(g: CaracolGraph, name: str):
    return length_framing(g) if name == "length" else planar_framing(g)


def cmd_build(args) -> int:
    nu = _read_nu(args.nu)
    g = CaracolGraph(nu)
    summary = {"a": g.a, "b": g.b, "vertices": g.n_plus_1, "edges": len(g.edges), "dim": g.dim}
    if args.dot:
        print(" ".join(f"{k}={v}" for k, v in summary.items()), file=sys.stderr)
        sys.stdout.write(g.to_dot())
    else:
        edge_list = [[e.u, e.v, e.label] for e in g.edges]
        _emit({"nu": nu.steps, **summary, "edge_list": edge_list})
    return 0


def cmd_triangulate(args) -> int:
    from .verify import check_dual, duals_isomorphic, path_label_function, tree_label_function
    nu = _read_nu(args.nu)
    g = CaracolGraph(nu)
    names = ["length", "planar"] if args.framing == "both" else [args.framing]
    status = 0
    results = {}
    for name in names:
        cliques = maximal_cliques(g, _framing(g, name))
        check = check_dual(nu, name, samples=args.samples)
        if not check.ok:
            status = 1
        if args.labels == "trees" and name == "length":
            label = tree_label_function(g)
        else:
            label = path_label_function(g, name)
        dual = dual_graph(cliques)
        if args.emit == "dual-dot":
            sys.stdout.write(dual.to_dot(label))
            continue
        entry = check.to_dict()
        if args.emit == "cliques":
            entry["cliques"] = json.loads(cliques_to_json(cliques))
        entry["labels"] = [label(c) for c in cliques]
        entry["dual_edges"] = sorted([i, j] for i, j in dual.edges)
        results[name] = entry
        verdict = "PASS" if check.ok else "FAIL"
        target = "Tam(nu)" if name == "length" else "I(nu)"
        print(f"{name}: {len(cliques)} simplices, dual ~ {target}: {verdict}", file=sys.stderr)
        for w in check.witness:
            print(f"  witness: {w}", file=sys.stderr)
    if args.emit != "dual-dot":
        payload = {"nu": nu.steps, "framings": results}
        if len(names) == 2:
            payload["duals_isomorphic"] = duals_isomorphic(nu)
        _emit(payload)
    return status


def cmd_count(args) -> int:
    from .enumeration import count_report, rational_catalan, rational_path
    if args.rational:
        a, b = args.rational
        nu = rational_path(a, b)
    elif args.nu:
        nu = _read_nu(args.nu)
    else:
        raise SystemExit("count needs a path or --rational A B")
    report = count_report(nu)
    if args.rational:
        report["rational_catalan"] = rational_catalan(*args.rational)
        report["agreement"]["rational"] = report["rational_catalan"] == report["cat"]
        report["agree"] = all(report["agreement"].values())
    _emit(report)
    return 0 if report["agree"] else 1


def cmd_report(args) -> int:
    from .enumeration import count_report
    from .plotting import save_report_figures
    from .verify import check_dual, path_label_function
    nu = _read_nu(args.nu)
    g = CaracolGraph(nu)
    outdir = Path(args.out)
    report = count_report(nu)
    duals = {}
    checks = {}
    for name in ("length", "planar"):
        cliques = maximal_cliques(g, _framing(g, name))
        duals[name] = (dual_graph(cliques), path_label_function(g, name))
        checks[name] = check_dual(nu, name, samples=args.samples)
    figures = save_report_figures(g, duals, report["hstar"], outdir)
    rows = [("quantity", "value")]
    rows += [(f"count.{k}", v) for k, v in sorted(report["counts"].items())]
    rows += [(f"hstar.{i}", v) for i, v in enumerate(report["hstar"])]
    rows += [(f"facets.{k}", v) for k, v in sorted(report["facets"].items())]
    rows += [(f"dual.{k}", checks[k].ok) for k in sorted(checks)]
    with open(outdir / "summary.tsv", "w", newline="") as fh:
        csv.writer(fh, delimiter="\t", lineterminator="\n").writerows(rows)
    report["duals"] = {k: c.to_dict() for k, c in checks.items()}
    report["figures"] = [str(p) for p in figures]
    with open(outdir / "report.json", "w") as fh:
        fh.write(json.dumps({"schema": SCHEMA, **report}, sort_keys=True) + "\n")
    _emit(report)
    ok = report["agree"] and all(c.ok for c in checks.values())
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nucaracol",
                                description="nu-caracol flow polytopes and their framed triangulations")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="print car(nu) as JSON or DOT")
    b.add_argument("nu")
    fmt = b.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON (default)")
    fmt.add_argument("--dot", action="store_true", help="Graphviz DOT")
    b.set_defaults(func=cmd_build)

    t = sub.add_parser("triangulate", help="framed triangulation and dual-graph verdicts")
    t.add_argument("nu")
    t.add_argument("--framing", choices=["length", "planar", "both"], default="both")
    t.add_argument("--emit", choices=["cliques", "dual-dot", "labels"], default="labels")
    t.add_argument("--labels", choices=["paths", "trees"], default="paths")
    t.add_argument("--samples", type=int, default=200,
                   help="interior sample points per simplex for the overlap check")
    t.set_defaults(func=cmd_triangulate)

    c = sub.add_parser("count", help="Cat(nu), h* and facets with cross-checks")
    c.add_argument("nu", nargs="?")
    c.add_argument("--rational", nargs=2, type=int, metavar=("A", "B"))
    c.set_defaults(func=cmd_count)

    r = sub.add_parser("report", help="counts plus PNG figures and a TSV summary")
    r.add_argument("nu")
    r.add_argument("--out", default="report")
    r.add_argument("--samples", type=int, default=200)
    r.set_defaults(func=cmd_report)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PathSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
