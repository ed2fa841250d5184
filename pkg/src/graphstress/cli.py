"""Command-line front end.

Exit status is 0 on success, 1 on domain errors (for example a disconnected
graph where connectivity is required) and 2 on parse or usage errors.
"""
from __future__ import annotations

import argparse
import sys

from . import generators
from .errors import GraphError, IndexOutOfRange, ParseError, SelfLoop
from .formats import InputFormat, detect_format, parse_graph, to_edge_list_text, to_graph6
from .geodesics import StressProfile, enumerate_geodesics, stress_oracle, stress_profile
from .graph import Graph, bfs, is_connected
from .report import emit_json, to_json_dict
from .structure import classify
from .verify import verify

THEOREM_CHOICES = {
    "2.4": "T2_4",
    "2.5": "C2_5",
    "2.6": "P2_6",
    "4.1": "T4_1",
    "4.2": "C4_2",
    "6.5": "T6_5",
    "6.6": "T6_6",
    "battery": "BATTERY",
}


def _read_graphs(args) -> list[Graph]:
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    fmt = detect_format(text) if args.format == "auto" else InputFormat(args.format)
    try:
        if fmt is InputFormat.GRAPH6:
            # one graph per line
            return [parse_graph(line, fmt) for line in text.splitlines() if line.strip()]
        return [parse_graph(text, fmt)]
    except (IndexOutOfRange, SelfLoop) as exc:
        raise ParseError(str(exc)) from exc


def _stress_table(g: Graph, stress: tuple[int, ...], total: int) -> str:
    connected = is_connected(g)
    lines = [f"{'vertex':>6} {'degree':>6} {'eccentricity':>12} {'stress':>8}"]
    for v in range(g.n):
        ecc = max(bfs(g, v).dist) if connected else "-"
        lines.append(f"{v:>6} {g.degree(v):>6} {ecc:>12} {stress[v]:>8}")
    lines.append(f"total stress: {total}")
    return "\n".join(lines)


def cmd_compute(args) -> None:
    for g in _read_graphs(args):
        profile = stress_profile(g)
        print(emit_json(profile) if args.json else _stress_table(g, profile.stress, profile.total))


def cmd_oracle(args) -> None:
    for g in _read_graphs(args):
        paths = enumerate_geodesics(g, cap=args.cap)
        values = tuple(stress_oracle(g, v, paths) for v in range(g.n))
        if args.json:
            print(emit_json(StressProfile(values, sum(values))))
        else:
            print(_stress_table(g, values, sum(values)))


def cmd_classify(args) -> None:
    for g in _read_graphs(args):
        report = classify(g)
        if args.json:
            print(emit_json(report))
            continue
        for key, value in to_json_dict(report).items():
            if key != "schema":
                print(f"{key}: {value}")


def cmd_generate(args) -> None:
    family = generators.Family(args.family)
    if family is generators.Family.NAMED:
        if len(args.params) != 1:
            raise ParseError("named takes exactly one fixture tag")
        spec = generators.FamilySpec(family, name=args.params[0])
    else:
        try:
            params = tuple(int(p) for p in args.params)
        except ValueError:
            raise ParseError(f"parameters must be integers, got {args.params}") from None
        spec = generators.FamilySpec(family, params, seed=args.seed)
    g = spec.build()
    if args.emit == "graph6":
        print(to_graph6(g))
    else:
        sys.stdout.write(to_edge_list_text(g))


def cmd_verify(args) -> None:
    report = verify(
        THEOREM_CHOICES[args.theorem],
        args.max_n,
        jobs=args.jobs,
        min_degree=args.prune_min_degree,
        allow_n8=args.allow_n8,
    )
    if args.json:
        print(emit_json(report))
    else:
        status = "VERIFIED" if report.verified else "COUNTEREXAMPLES FOUND"
        print(f"{report.theorem}: {status} over {report.scope}")
        print(f"graphs scanned: {report.graphs_scanned}  elapsed: {report.elapsed:.1f}s")
        for n, c in sorted(report.counts_by_n.items()):
            print(f"  n={n}: {c}")
        if report.witnesses:
            print("witnesses (canonical graph6): " + " ".join(report.witnesses))
        for ce in report.counterexamples:
            print(f"counterexample [{ce['check']}] n={ce['n']} edges={ce['edges']}")
        for note in report.notes:
            print(f"note: {note}")
    if not report.verified:
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphstress", description="Exact vertex stress of simple graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", default="-", help="graph file, '-' for stdin")
        p.add_argument("--format", default="auto", choices=["auto"] + [f.value for f in InputFormat])
        p.add_argument("--json", action="store_true", help="emit schema-1 JSON")

    p = sub.add_parser("compute", help="stress of every vertex")
    add_input(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("oracle", help="stress by enumerating every geodesic")
    add_input(p)
    p.add_argument("--cap", type=int, default=10**6, help="maximum number of geodesics")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("classify", help="structural classification report")
    add_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate", help="emit a standard family member")
    p.add_argument("family", choices=[f.value for f in generators.Family])
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--emit", choices=["edgelist", "graph6"], default="edgelist")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="exhaustive check of a characterisation")
    p.add_argument("--theorem", required=True, choices=list(THEOREM_CHOICES))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--prune-min-degree", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-n8", action="store_true", help="permit the long n = 8 scan")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        return int(exc.code or 0)
    return 0


if __name__ == "__main__":
    sys.exit(main())
