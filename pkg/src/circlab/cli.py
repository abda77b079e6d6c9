"""Command-line front end: families, sets, stepping, classification, export.

Exit codes: 0 success, 1 computation error (message on stderr), 2 usage
error (argparse).  Library warnings are echoed to stdout as `note:`
lines so scripted output stays machine-readable.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .adams import type1_set
from .core import CirculantGraph, InputError, adjacency, parse_graph
from .families import gen_8n_basic, gen_8n_extended, gen_np3, program_format
from .oracle import OrderBoundError, classify_pair
from .theta import ThetaTransform, classify_theta, theta_exact_image, type2_set


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circlab",
        description="Construct, transform, and classify circulant graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    families = sub.add_parser("families", help="generate constructed families")
    fam_sub = families.add_subparsers(dest="family", required=True)

    np3 = fam_sub.add_parser("np3", help="order n*p^3 families for an odd prime p")
    np3.add_argument("--p", type=int, required=True, help="odd prime")
    np3.add_argument("--n-max", type=int, default=5, help="largest n (default 5)")
    np3.add_argument("--k-max", type=int, default=None, help="cap the seed scan")
    np3.add_argument(
        "--full-range",
        action="store_true",
        help="scan seeds up to n*p^2 - 1 instead of n*p - 1",
    )
    np3.add_argument(
        "--program-format",
        action="store_true",
        help="emit the classic generator program's text block",
    )
    np3.add_argument("--json", action="store_true")

    f8n = fam_sub.add_parser("8n", help="order 8n swap pair")
    f8n.add_argument("--n", type=int, required=True)
    f8n.add_argument("--s", type=int, required=True)
    f8n.add_argument("--evens", default=None, help="comma-separated even jumps")
    f8n.add_argument("--json", action="store_true")

    type1 = sub.add_parser("type1", help="unit-multiplier set of a graph")
    type1.add_argument("--graph", required=True, help='literal like "C16(1,2,4,7)"')
    type1.add_argument("--json", action="store_true")

    type2 = sub.add_parser("type2", help="residue-shift set of a graph")
    type2.add_argument("--graph", required=True)
    type2.add_argument("--m", type=int, required=True)
    type2.add_argument("--json", action="store_true")

    step = sub.add_parser("step", help="one residue-shift application")
    step.add_argument("--graph", required=True)
    step.add_argument("--m", type=int, required=True)
    step.add_argument("--t", type=int, required=True)
    step.add_argument("--json", action="store_true")

    classify = sub.add_parser("classify", help="strongest relation between two graphs")
    classify.add_argument("--a", required=True)
    classify.add_argument("--b", required=True)
    classify.add_argument("--json", action="store_true")

    export = sub.add_parser("export", help="serialize a graph")
    export.add_argument("--graph", required=True)
    export.add_argument("--format", required=True, choices=("dot", "adj", "json"))

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--static", default=None, help="static asset directory")

    return parser


def _print(lines: list[str], payload, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _cmd_families(args) -> None:
    if args.family == "np3":
        if args.program_format:
            sys.stdout.write(
                program_format(
                    args.p, args.n_max, k_max=args.k_max, full_range=args.full_range
                )
            )
            return
        blocks = []
        lines = []
        for n in range(1, args.n_max + 1):
            fams = gen_np3(args.p, n, k_max=args.k_max, full_range=args.full_range)
            blocks.extend(f.to_json() for f in fams)
            lines.append(f"p = {args.p} n = {n}")
            for fam in fams:
                lines.append(
                    f"k={fam.k}: " + " ".join(str(m) for m in fam.members)
                )
        _print(lines, {"p": args.p, "families": blocks}, args.json)
    else:
        if args.evens is not None:
            evens = tuple(int(e) for e in args.evens.split(","))
            fam = gen_8n_extended(args.n, args.s, evens)
        else:
            fam = gen_8n_basic(args.n, args.s)
        lines = [
            f"R = {fam.r_graph}",
            f"S = {fam.s_graph}",
            f"theta: m={fam.transform.m} t={fam.transform.t}",
        ]
        _print(lines, fam.to_json(), args.json)


def _cmd_type1(args) -> None:
    t1 = type1_set(parse_graph(args.graph))
    lines = [f"{member} x={t1.witness_for(member).x}" for member in t1.members]
    _print(lines, t1.to_json(), args.json)


def _cmd_type2(args) -> None:
    result = type2_set(parse_graph(args.graph), args.m)
    lines = [str(member) for member in result.members]
    _print(lines, result.to_json(), args.json)


def _cmd_step(args) -> None:
    graph = parse_graph(args.graph)
    transform = ThetaTransform(graph.order, args.m, args.t)
    image = theta_exact_image(graph, transform)
    cls = classify_theta(graph, transform)
    first = (
        str(CirculantGraph(image.circulant_jumps))
        if image.is_circulant
        else "Non-Circulant"
    )
    payload = {
        "graph": str(graph),
        **image.to_json(),
        "classification": cls.to_json(),
    }
    _print([first, str(cls)], payload, args.json)


def _cmd_classify(args) -> None:
    a, b = parse_graph(args.a), parse_graph(args.b)
    cls = classify_pair(a, b)
    _print([str(cls)], {"a": str(a), "b": str(b), **cls.to_json()}, args.json)


def _cmd_export(args) -> None:
    graph = parse_graph(args.graph)
    if args.format == "json":
        print(json.dumps(graph.to_json()))
        return
    labeled = adjacency(graph)
    if args.format == "dot":
        print(f'graph "{graph}" {{')
        for a, b in sorted(set(labeled.edges)):
            print(f"  {a} -- {b};")
        print("}")
        return
    n = graph.order
    nbr = labeled.neighbor_sets()
    for i in range(n):
        print(" ".join("1" if j in nbr[i] else "0" for j in range(n)))


def _cmd_serve(args) -> None:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(args.static), host=args.host, port=args.port)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "families": _cmd_families,
        "type1": _cmd_type1,
        "type2": _cmd_type2,
        "step": _cmd_step,
        "classify": _cmd_classify,
        "export": _cmd_export,
        "serve": _cmd_serve,
    }
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            handlers[args.command](args)
        for w in caught:
            print(f"note: {w.message}")
    except (InputError, OrderBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
