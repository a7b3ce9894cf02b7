"""Command-line interface: ``respart analyze|construct|verify|sweep|export-dot``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

from .anatomy import gen_tree_anatomy, tree_anatomy
from .bounds import bounds_report
from .constructions import METHODS, choose_method
from .errors import Disconnected, ParseError, PreconditionViolated, RespartError, TooLarge
from .graph import (
    Graph,
    all_pairs_distances,
    is_connected,
    is_generalized_tree,
    is_path_graph,
    is_star_graph,
    is_tree,
)
from .io import format_partition, read_graph, read_partition, to_dot
from .lab import sweep
from .resolver import exact_limits, is_resolving_partition, partition_representations

EXIT_OK, EXIT_USER, EXIT_PRECONDITION, EXIT_VIOLATIONS = 0, 2, 3, 4


def graph_kind(g: Graph) -> str:
    if is_path_graph(g):
        return "path"
    if is_star_graph(g):
        return "star"
    if is_tree(g):
        return "tree"
    if is_generalized_tree(g):
        return "generalized_tree"
    return "graph"


def anatomy_dict(g: Graph) -> dict:
    out: dict = {}
    if is_tree(g) and not is_path_graph(g):
        a = tree_anatomy(g)
        out["tree"] = {
            "n1": a.n1,
            "ex": a.ex,
            "kappa": a.kappa,
            "tau": a.tau,
            "xi": a.xi,
            "theta": a.theta,
            "leaves": list(a.leaves),
            "majors": list(a.majors),
            "supports": list(a.supports),
            "exterior_majors": [
                {"major": e.major, "terminals": list(e.terminals), "legs": [list(x) for x in e.legs]}
                for e in a.exterior_majors
            ],
        }
    if is_generalized_tree(g):
        ga = gen_tree_anatomy(g)
        out["generalized_tree"] = {
            "zeta": ga.zeta,
            "vartheta": ga.vartheta,
            "phi": ga.phi,
            "blocks": [list(b) for b in ga.blocks.blocks],
            "support_cut_vertices": [
                {"vertex": s.vertex, "exterior_extremes": list(s.exterior_extremes)} for s in ga.support_cut_vertices
            ],
            "q_blocks": [{"block": list(q.block), "extremes": list(q.extremes)} for q in ga.q_blocks],
        }
    return out


def analyze(g: Graph, exact: bool = False) -> dict:
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    if exact and g.n > exact_limits()[0]:
        raise TooLarge(f"exact search is capped at n <= {exact_limits()[0]} (n = {g.n})")
    report = bounds_report(g, compute_exact=exact)
    pd, source = report.exact_pd, "oracle" if report.exact_pd is not None else None
    if pd is None and is_path_graph(g) and g.n >= 2:
        pd, source = 2, "path rule"
    return {
        "n": g.n,
        "m": g.m,
        "kind": graph_kind(g),
        "anatomy": anatomy_dict(g),
        "pd": pd,
        "pd_source": source,
        "dim": report.exact_dim,
        "pd_witness": report.pd_witness,
        "dim_witness": report.dim_witness,
        "params": report.params,
        "bounds": [asdict(e) for e in report.entries],
    }


def _print_analysis(doc: dict) -> None:
    print(f"n={doc['n']} m={doc['m']} kind={doc['kind']}")
    for k, v in doc["params"].items():
        print(f"  {k} = {v}")
    if doc["pd"] is not None:
        print(f"pd = {doc['pd']} ({doc['pd_source']})")
    if doc["dim"] is not None:
        print(f"dim = {doc['dim']}")
    print("bounds:")
    for e in doc["bounds"]:
        if not e["applicable"]:
            continue
        state = "" if e["satisfied"] is None else ("ok" if e["satisfied"] else "VIOLATED")
        tight = " tight" if e["tight"] else ""
        print(f"  {e['name']:<12} {e['statement']:<60} value={e['value']} {state}{tight}")


def cmd_analyze(args) -> int:
    doc = analyze(read_graph(args.input), exact=args.exact)
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        _print_analysis(doc)
    return EXIT_OK


def cmd_construct(args) -> int:
    g = read_graph(args.input)
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    method = choose_method(g) if args.method == "auto" else METHODS[args.method]
    pi = method.build(g)
    if args.output:
        Path(args.output).write_text(format_partition(pi))
    summary = {"method": method.name, "bound": method.bound, "classes": len(pi), "partition": pi.as_lists()}
    if args.json:
        print(json.dumps(summary, indent=2))
    else:
        print(f"method={method.name} bound={method.bound} classes={len(pi)}")
        if not args.output:
            print(format_partition(pi), end="")
    return EXIT_OK


def verify(g: Graph, partition) -> dict:
    dm = all_pairs_distances(g)
    verdict = is_resolving_partition(dm, partition)
    doc = {"resolving": verdict.resolving, "classes": len(partition), "witness": None}
    if verdict.witness is not None:
        reps = partition_representations(dm, partition)
        u, v = verdict.witness
        doc["witness"] = {"pair": [u, v], "representation": reps[u].tolist()}
    return doc


def cmd_verify(args) -> int:
    g = read_graph(args.input)
    doc = verify(g, read_partition(args.partition))
    if args.json:
        print(json.dumps(doc, indent=2))
    elif doc["resolving"]:
        print(f"resolving ({doc['classes']} classes)")
    else:
        w = doc["witness"]
        print(f"not resolving: vertices {w['pair'][0]} and {w['pair'][1]} both have r = {tuple(w['representation'])}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.kind == "trees":
        params = dict(n_min=args.min_n, n_max=args.max_n, pd_max_n=args.pd_max_n, dim_max_n=args.dim_max_n,
                      workers=args.workers)
    elif args.kind == "gentrees":
        params = dict(count=args.count, seed_start=args.seed_start, max_blocks=args.max_blocks,
                      max_vertices=args.max_vertices)
    else:
        params = dict(count=args.count, n_max=args.max_n, seed_start=args.seed_start)
    result = sweep(args.kind, **params)
    print(f"{args.kind}: {result.tested} instances, {len(result.violations)} violations")
    if args.violations:
        Path(args.violations).write_text(json.dumps([asdict(v) for v in result.violations], indent=2))
    for v in result.violations[:20]:
        print(f"  {v.instance}: {v.bound} ({v.expected}) {v.observed}")
    return EXIT_OK if result.passed else EXIT_VIOLATIONS


def cmd_export_dot(args) -> int:
    g = read_graph(args.input)
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    pi = None
    if args.partition:
        pi = read_partition(args.partition)
        pi.validate(g.n)
    elif args.method:
        pi = (choose_method(g) if args.method == "auto" else METHODS[args.method]).build(g)
    text = to_dot(g, pi)
    if args.output:
        Path(args.output).write_text(text)
    else:
        print(text, end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="respart", description="Resolving partitions of trees and generalized trees.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="anatomy and bounds report")
    a.add_argument("input")
    a.add_argument("--exact", action="store_true", help="run the brute-force oracle for pd and dim")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    methods = sorted(METHODS) + ["auto"]
    c = sub.add_parser("construct", help="build a resolving partition")
    c.add_argument("input")
    c.add_argument("--method", choices=methods, default="auto")
    c.add_argument("-o", "--output", help="partition file to write")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check whether a partition resolves the graph")
    v.add_argument("input")
    v.add_argument("partition")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="check all bounds over many instances")
    s.add_argument("kind", choices=["trees", "gentrees", "random-trees"])
    s.add_argument("--min-n", type=int, default=2)
    s.add_argument("--max-n", type=int, default=8)
    s.add_argument("--pd-max-n", type=int, default=8)
    s.add_argument("--dim-max-n", type=int, default=8)
    s.add_argument("--count", type=int, default=200)
    s.add_argument("--seed-start", type=int, default=0)
    s.add_argument("--max-blocks", type=int, default=6)
    s.add_argument("--max-vertices", type=int, default=12)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--violations", help="write violations as JSON here")
    s.set_defaults(func=cmd_sweep)

    d = sub.add_parser("export-dot", help="DOT drawing, optionally coloured by a partition")
    d.add_argument("input")
    g = d.add_mutually_exclusive_group()
    g.add_argument("--partition")
    g.add_argument("--method", choices=methods)
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionViolated as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ParseError, RespartError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER


if __name__ == "__main__":
    sys.exit(main())
