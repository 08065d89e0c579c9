"""Command-line surface: one verb per capability.

Subcommands: depth, betti, kappa, powers, verify, fuzz, search-depth2,
example, ideal-depth.  Exit status 0 on success, 1 when a verification
check fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Optional

from . import graphs as gr
from . import monomials as mono
from . import verify as ver
from .betti import depth_monomial_quotient, graded_betti_table, graph_depth, kappa_via_betti
from .complexes import clique_complex
from .graphs import Graph, GuardError, ParseError
from .homology import FieldSpec

_EXAMPLE_RE = re.compile(r"^(c|p|k|jc)(\d+(?:,\d+)*)$")


def resolve_example(name: str) -> Graph:
    """Names: figure1, cN (cycle), pN (path), kN (complete), kA,B
    (bipartite), kT,T,T (tripartite), jcT (joined cycles)."""
    low = name.lower()
    if low in ("figure1", "fig1"):
        return ver.construct_example("figure1")
    m = _EXAMPLE_RE.match(low)
    if not m:
        raise ValueError(f"unknown example name {name!r}")
    kind, nums = m.group(1), [int(x) for x in m.group(2).split(",")]
    if kind == "c" and len(nums) == 1:
        return ver.construct_example("cycle", t=nums[0])
    if kind == "p" and len(nums) == 1:
        return ver.construct_example("path", t=nums[0])
    if kind == "jc" and len(nums) == 1:
        return ver.construct_example("joined_cycles", t=nums[0])
    if kind == "k":
        if len(nums) == 1:
            return ver.construct_example("complete", t=nums[0])
        if len(nums) == 2:
            return ver.construct_example("bipartite", a=nums[0], b=nums[1])
        if len(nums) == 3 and len(set(nums)) == 1:
            return ver.construct_example("multipartite", t=nums[0])
    raise ValueError(f"unknown example name {name!r}")


def load_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "name", None):
        return resolve_example(args.name)
    if not getattr(args, "input", None):
        raise ValueError("provide exactly one of --input or --name")
    path = Path(args.input)
    text = path.read_text()
    fmt = args.input_format
    if fmt == "auto":
        fmt = "graph6" if path.suffix in (".g6", ".graph6") else "edge-list"
    return gr.parse_graph(text, fmt)


def field_of(args: argparse.Namespace) -> FieldSpec:
    return FieldSpec(args.field)


def overrides_of(args: argparse.Namespace) -> list[str]:
    return ["allow-large"] if getattr(args, "allow_large", False) else []


def _header(args: argparse.Namespace) -> str:
    over = overrides_of(args)
    return f"# guard overrides: {', '.join(over)}\n" if over else ""


def render_report(report: ver.VerificationReport, args: argparse.Namespace) -> str:
    if args.format == "json":
        payload = report.to_dict(include_timings=args.timings)
        if overrides_of(args):
            payload = {"guard_overrides": overrides_of(args), **payload}
        return json.dumps(payload, indent=2) + "\n"
    if args.format == "csv":
        return _header(args) + ver.CSV_HEADER + "\n" + report.csv_row() + "\n"
    lines = []
    if overrides_of(args):
        lines.append(f"guard overrides: {', '.join(overrides_of(args))}")
    lines += [
        f"n = {report.n}, edges = {report.edge_count}, field = GF({report.field_characteristic})"
        if report.field_characteristic else
        f"n = {report.n}, edges = {report.edge_count}, field = QQ",
        f"kappa = {report.kappa}",
        f"chordal = {'yes' if report.is_chordal else 'no'}",
        f"depth = {report.depth}",
    ]
    if report.depth_symbolic_square is not None:
        lines.append(f"depth (symbolic square) = {report.depth_symbolic_square}")
    if report.depth_square is not None:
        lines.append(f"depth (square) = {report.depth_square}")
    if report.bounds is not None:
        b = report.bounds
        lines.append(f"bounds: upper = {b.upper}, lower depth/symbolic/square = "
                     f"{b.lower_depth}/{b.lower_symbolic}/{b.lower_square}, "
                     f"depth-2 kappa cap = {b.depth2_kappa_cap}")
    for c in report.checks:
        suffix = f" ({c.detail})" if c.detail else ""
        lines.append(f"check {c.name}: {c.status}{suffix}")
    return "\n".join(lines) + "\n"


def cmd_depth(args: argparse.Namespace) -> int:
    g = load_graph(args)
    r = graph_depth(g, field_of(args), allow_large=args.allow_large)
    w, ell = r.witness
    if args.format == "json":
        print(json.dumps({"n": g.n, "depth": r.depth,
                          "projective_dimension": r.projective_dimension,
                          "witness_subset": [v + 1 for v in gr.bits(w)],
                          "witness_degree": ell}, indent=2))
    else:
        sys.stdout.write(_header(args))
        print(f"depth = {r.depth}")
        print(f"projective dimension = {r.projective_dimension}")
        print(f"witness: W = {{{', '.join(str(v + 1) for v in gr.bits(w))}}}, degree = {ell}")
    return 0


def cmd_betti(args: argparse.Namespace) -> int:
    g = load_graph(args)
    table = graded_betti_table(clique_complex(g), field_of(args), allow_large=args.allow_large)
    if args.format == "json":
        payload = {f"{i},{j}": v for (i, j), v in sorted(table.entries.items())}
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        sys.stdout.write(_header(args) + table.to_csv())
    else:
        sys.stdout.write(_header(args) + table.to_triangle())
    return 0


def cmd_kappa(args: argparse.Namespace) -> int:
    g = load_graph(args)
    conn = gr.vertex_connectivity(g)
    kb = kappa_via_betti(g, field_of(args))
    witness = sorted(v + 1 for v in gr.bits(conn.witness)) if conn.witness is not None else None
    if args.format == "json":
        print(json.dumps({"kappa": conn.kappa, "kappa_via_betti": kb,
                          "separator": witness}, indent=2))
    else:
        print(f"kappa = {conn.kappa}")
        print(f"kappa via Betti vanishing = {kb}")
        print("separator = " + ("none (complete graph)" if witness is None else str(witness)))
    return 0 if conn.kappa == kb else 1


def cmd_powers(args: argparse.Namespace) -> int:
    g = load_graph(args)
    field = field_of(args)
    gc = g.complement()
    ideal = mono.edge_ideal(gc)
    square = mono.power(ideal, 2) if not ideal.is_zero() else ideal
    symb = mono.symbolic_power(gc, 2)
    d1 = graph_depth(g, field, allow_large=args.allow_large).depth
    d2 = depth_monomial_quotient(symb, field, allow_large=args.allow_large).depth \
        if not symb.is_zero() else g.n
    d3 = depth_monomial_quotient(square, field, allow_large=args.allow_large).depth \
        if not square.is_zero() else g.n
    if args.format == "json":
        print(json.dumps({"depth": d1, "depth_symbolic_square": d2, "depth_square": d3}, indent=2))
    else:
        sys.stdout.write(_header(args))
        print(f"depth = {d1}")
        print(f"depth (symbolic square) = {d2}")
        print(f"depth (square) = {d3}")
    return 0


def _report_command(args: argparse.Namespace) -> int:
    g = load_graph(args)
    report = ver.verify_graph(g, field_of(args), include_powers=args.powers,
                              allow_large=args.allow_large)
    sys.stdout.write(render_report(report, args))
    return 0 if report.all_pass() else 1


def cmd_verify(args: argparse.Namespace) -> int:
    return _report_command(args)


def cmd_example(args: argparse.Namespace) -> int:
    return _report_command(args)


def cmd_fuzz(args: argparse.Namespace) -> int:
    try:
        reports = ver.fuzz_campaign(args.n, args.count, args.seed, args.profile,
                                    field_of(args))
    except ver.FuzzFailure as exc:
        print(str(exc), file=sys.stderr)
        sys.stdout.write(render_report(exc.report, args))
        return 1
    if args.format == "json":
        print(json.dumps([r.to_dict(include_timings=args.timings) for r in reports], indent=2))
    elif args.format == "csv":
        sys.stdout.write(_header(args) + ver.CSV_HEADER + "\n")
        for r in reports:
            print(r.csv_row())
    else:
        sys.stdout.write(_header(args))
        print(f"{len(reports)} graphs verified, all checks passing")
    return 0


def cmd_search_depth2(args: argparse.Namespace) -> int:
    result = ver.search_depth2(args.n, args.budget, args.seed, field_of(args))
    if args.format == "json":
        print(json.dumps(result.to_dict(), indent=2))
    else:
        print(f"n = {result.n}, depth-2 kappa cap = {result.cap}")
        for k in sorted(result.realized):
            edges = " ".join(f"{u + 1}-{v + 1}" for u, v in result.realized[k])
            print(f"kappa = {k}: {edges}")
        print(f"max kappa found = {result.max_kappa}, cap attained = {result.cap_attained}")
        if result.over_cap:
            print(f"OVER CAP (theorem violation!): {result.over_cap}")
    return 1 if result.over_cap else 0


def cmd_ideal_depth(args: argparse.Namespace) -> int:
    text = Path(args.ideal).read_text()
    ideal = mono.parse_ideal(text, args.nvars)
    r = depth_monomial_quotient(ideal, field_of(args), allow_large=args.allow_large)
    if args.format == "json":
        print(json.dumps({"num_vars": ideal.num_vars, "depth": r.depth,
                          "projective_dimension": r.projective_dimension}, indent=2))
    else:
        sys.stdout.write(_header(args))
        print(f"ring has {ideal.num_vars} variables")
        print(f"depth = {r.depth}")
        print(f"projective dimension = {r.projective_dimension}")
    return 0


def _add_common(p: argparse.ArgumentParser, graph_input: bool = True) -> None:
    p.add_argument("--field", type=int, default=2,
                   help="coefficient field characteristic: a prime, or 0 for exact rationals")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker count; output is identical for any value")
    p.add_argument("--allow-large", action="store_true",
                   help="override size guards (echoed in the output header)")
    p.add_argument("--timings", action="store_true", help="include timings in JSON reports")
    if graph_input:
        p.add_argument("--input", help="graph file (edge list, or graph6 with .g6 suffix)")
        p.add_argument("--name", help="built-in example name, e.g. c6, figure1, k5,5, jc5")
        p.add_argument("--input-format", choices=("auto", "edge-list", "graph6"), default="auto")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sr-depth",
                                     description="Exact depth/connectivity invariants of "
                                                 "clique complexes and edge ideals")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("depth", help="depth of the clique-complex quotient ring")
    _add_common(p)
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser("betti", help="graded Betti table")
    _add_common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("kappa", help="vertex connectivity, two ways")
    _add_common(p)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("powers", help="depths of the square and symbolic square")
    _add_common(p)
    p.set_defaults(func=cmd_powers)

    p = sub.add_parser("verify", help="verify every inequality on one graph")
    _add_common(p)
    p.add_argument("--powers", action="store_true", help="include second-power depth checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("example", help="verify a named example graph")
    _add_common(p)
    p.add_argument("--powers", action="store_true", help="include second-power depth checks")
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("fuzz", help="seeded random verification campaign")
    _add_common(p, graph_input=False)
    p.add_argument("--n", type=int, required=True, help="maximum vertex count")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--profile", choices=("all", "chordal", "powers"), default="all")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("search-depth2", help="depth-2 kappa frontier search")
    _add_common(p, graph_input=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=200, help="number of random graphs to try")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_search_depth2)

    p = sub.add_parser("ideal-depth", help="depth of a monomial quotient from an ideal file")
    _add_common(p, graph_input=False)
    p.add_argument("--ideal", required=True, help="file with one generator per line, e.g. x1^2*x3")
    p.add_argument("--nvars", type=int, default=None)
    p.set_defaults(func=cmd_ideal_depth)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, GuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
