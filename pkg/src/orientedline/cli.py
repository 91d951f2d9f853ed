"""Command-line front end: ``orientedline <subcommand> ...``.

Inputs (``--in``, ``--src``, ``--dst``) accept a graph6 string, a generator
spec (``complete:5``, ``petersen``, ``cycle:5``, ``path:4``, ``cube:3``,
``bipartite:3,3``, ``circulant:8:1,4``, ``paw``), ``-`` for graph6 lines
on stdin, or ``@path`` for a file of graph6 lines. Each input line produces one
report. Exit codes: 0 success, 1 verification mismatch or failed search,
2 invalid input or failed hypothesis.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Sequence

from .exact_algebra import charpoly_exact
from .graph_core import (
    Digraph,
    Graph,
    Graph6Error,
    GraphError,
    HypothesisError,
    circulant_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    paw_graph,
    hypercube_graph,
    parse_graph6,
    path_graph,
    petersen_graph,
    validate_regular_connected,
    write_graph6,
)
from .line_operators import (
    Orientation,
    operator_matrix,
    oriented_line_graph,
    symmetric_digraph,
    underlying_and_line_graph,
)
from .spectral_identities import IDENTITIES, spectrum_handle, verify_identity
from .star_homomorphism import (
    check_lbh,
    check_onh,
    find_lbh,
    find_onh,
    star_chromatic_number,
    theorem7_check,
)

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


class InputError(ValueError):
    pass


def generator_graph(spec: str) -> Graph | None:
    """Graph for a generator spec, or None when ``spec`` is not one."""
    name, _, rest = spec.partition(":")
    try:
        if name == "complete" and rest:
            return complete_graph(int(rest))
        if name == "cycle" and rest:
            return cycle_graph(int(rest))
        if name == "path" and rest:
            return path_graph(int(rest))
        if name == "cube" and rest:
            return hypercube_graph(int(rest))
        if name == "bipartite" and rest:
            a, b = rest.split(",")
            return complete_bipartite_graph(int(a), int(b))
        if name == "circulant" and rest:
            n, _, jumps = rest.partition(":")
            return circulant_graph(int(n), [int(j) for j in jumps.split(",")])
    except ValueError as exc:
        raise InputError(f"bad generator spec {spec!r}: {exc}") from exc
    if spec == "petersen":
        return petersen_graph()
    if spec == "paw":
        return paw_graph()
    return None


def read_graphs(source: str) -> Iterator[tuple[str, Graph]]:
    """Yield ``(label, graph)`` for each graph named by ``source``."""
    if source == "-" or source.startswith("@"):
        stream = sys.stdin if source == "-" else open(source[1:], encoding="ascii")
        try:
            for line in stream:
                line = line.strip()
                if line:
                    yield line, _parse(line)
        finally:
            if stream is not sys.stdin:
                stream.close()
        return
    g = generator_graph(source)
    yield source, g if g is not None else _parse(source)


def _parse(text: str) -> Graph:
    try:
        return parse_graph6(text)
    except Graph6Error as exc:
        raise InputError(f"cannot read {text!r}: {exc}") from exc


def single_graph(source: str) -> Graph:
    graphs = list(read_graphs(source))
    if len(graphs) != 1:
        raise InputError(f"{source!r} must name exactly one graph")
    return graphs[0][1]


def digraph_source(source: str) -> Digraph:
    """Digraph for ``olg:<src>`` (oriented line graph), ``auto:<src>`` (low -> high
    orientation of the graph) or ``dline:<src>`` / a bare graph (D(G))."""
    if source.startswith("auto:"):
        return Orientation.auto(single_graph(source[5:])).digraph()
    if source.startswith("olg:"):
        return oriented_line_graph(single_graph(source[4:]))[0]
    if source.startswith("dline:"):
        source = source[6:]
    return symmetric_digraph(single_graph(source))


def orientation_arg(g: Graph, spec: str | None) -> Orientation:
    if spec is None or spec == "auto":
        return Orientation.auto(g)
    if spec.startswith("random:"):
        return Orientation.random(g, int(spec[7:]))
    try:
        return Orientation.from_arcs(g, json.loads(spec))
    except (json.JSONDecodeError, TypeError, GraphError) as exc:
        raise InputError(f"bad orientation {spec!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# Subcommands; each returns (exit code, list of JSON-able reports)
# ---------------------------------------------------------------------------


def cmd_build(args, label: str, g: Graph):
    if args.op == "dline":
        dg = symmetric_digraph(g)
        return EXIT_OK, [{"graph": label, "op": "dline", "n": dg.n, "arcs": dg.arc_list()}]
    if args.op == "olg":
        dg, idx = oriented_line_graph(g)
        return EXIT_OK, [
            {
                "graph": label,
                "op": "olg",
                "n": dg.n,
                "vertices": [list(a) for a in idx.arcs],
                "arcs": dg.arc_list(),
            }
        ]
    lstar, lg, _ = underlying_and_line_graph(g)
    h = lstar if args.op == "lstar" else lg
    return EXIT_OK, [
        {"graph": label, "op": args.op, "n": h.n, "edges": [list(e) for e in h.edges], "graph6": write_graph6(h)}
    ]


_MATRIX_KINDS = {
    "lstar": "adjacency_lstar",
    "line": "adjacency_line",
    "nb": "nonbacktracking",
    "skew": "skew",
    "hermitian": "hermitian",
    "signed": "signed",
}


def cmd_charpoly(args, label: str, g: Graph):
    orientation = None
    if args.matrix == "signed":
        validate_regular_connected(g)
        orientation = orientation_arg(g, args.orient)
    p = charpoly_exact(operator_matrix(g, _MATRIX_KINDS[args.matrix], orientation))
    report = {"graph": label, "matrix": args.matrix, **p.to_json()}
    if orientation is not None:
        report["orientation"] = orientation.arc_list()
    return EXIT_OK, [report]


def cmd_verify(args, label: str, g: Graph):
    names = IDENTITIES if args.identity == "all" else (args.identity,)
    h = spectrum_handle(g)
    orientation = orientation_arg(g, args.orient)
    reports = []
    for which in names:
        r = verify_identity(g, which, orientation if which == "signed" else None, handle=h)
        reports.append({**r.to_json(), "graph": label})
    code = EXIT_OK if all(r["verdict"] == "equal" for r in reports) else EXIT_FAIL
    return code, reports


def cmd_starcolor(args, label: str, g: Graph):
    qmax = args.qmax if args.qmax is not None else max(g.n, 1)
    c = star_chromatic_number(g, qmax)
    if c is None:
        return EXIT_FAIL, [{"graph": label, "star_chromatic_number": None, "qmax": qmax, "verdict": "exceeds-qmax"}]
    return EXIT_OK, [{"graph": label, "star_chromatic_number": c.q, "coloring": list(c.f)}]


def cmd_hom(args):
    psi = json.loads(args.map) if args.map else None
    if args.kind == "lbh":
        src, dst = single_graph(args.src), single_graph(args.dst)
        if psi is None:
            psi = find_lbh(src, dst)
            found = psi is not None
            return (EXIT_OK if found else EXIT_FAIL), [
                {"kind": "lbh", "found": found, "map": list(psi) if found else None}
            ]
        bad = check_lbh(src, dst, psi)
    else:
        mode = "injective" if args.kind == "onih" else "bijective"
        src, dst = digraph_source(args.src), digraph_source(args.dst)
        if psi is None:
            psi = find_onh(src, dst, mode)
            found = psi is not None
            return (EXIT_OK if found else EXIT_FAIL), [
                {"kind": args.kind, "found": found, "map": list(psi) if found else None}
            ]
        bad = check_onh(src, dst, psi, mode)
    report = {"kind": args.kind, "valid": bad is None}
    if bad is not None:
        report["violation"] = bad.to_json()
    return (EXIT_OK if bad is None else EXIT_FAIL), [report]


def cmd_thm7(args, label: str, g: Graph):
    r = theorem7_check(g, args.p, force_divisibility=args.force)
    report = {"graph": label, **r.to_json()}
    if not r.hypotheses_hold and not args.force:
        return EXIT_INVALID, [report]
    return (EXIT_OK if r.divisible else EXIT_FAIL), [report]


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orientedline", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit JSON lines")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON lines")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for batch input (order is kept)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="construct D(G), the oriented line graph, L*(G) or L(G)")
    p.add_argument("--op", choices=["dline", "olg", "lstar", "line"], required=True)
    p.add_argument("--in", dest="source", required=True)

    p = sub.add_parser("charpoly", parents=[common], help="exact characteristic polynomial of an operator")
    p.add_argument("--matrix", choices=list(_MATRIX_KINDS), required=True)
    p.add_argument("--in", dest="source", required=True)
    p.add_argument("--orient", default="auto", help="auto, random:SEED or a JSON arc list")

    p = sub.add_parser("verify", parents=[common], help="check closed forms against direct computation")
    p.add_argument("--identity", choices=[*IDENTITIES, "nb", "all"], required=True)
    p.add_argument("--in", dest="source", required=True)
    p.add_argument("--orient", default="auto")

    p = sub.add_parser("starcolor", parents=[common], help="star chromatic number with a witness")
    p.add_argument("--in", dest="source", required=True)
    p.add_argument("--qmax", type=int)

    p = sub.add_parser("hom", parents=[common], help="check or search LBH / ONIH / ONBH")
    p.add_argument("--kind", choices=["lbh", "onih", "onbh"], required=True)
    p.add_argument("--src", required=True)
    p.add_argument("--dst", required=True)
    p.add_argument("--map", help="JSON array of target vertices; omit to search")

    p = sub.add_parser("thm7", parents=[common], help="divisibility check for K_{1,p+1}-free 2p-regular graphs")
    p.add_argument("--in", dest="source", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--force", action="store_true", help="test divisibility even if hypotheses fail")
    return parser


def _emit(report: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(report, sort_keys=True) + "\n")
        return
    for k, v in report.items():
        if isinstance(v, (list, dict)):
            v = json.dumps(v)
        out.write(f"{k:>22}: {v}\n")
    out.write("\n")


_HANDLERS = {
    "build": cmd_build,
    "charpoly": cmd_charpoly,
    "verify": cmd_verify,
    "starcolor": cmd_starcolor,
    "thm7": cmd_thm7,
}


def _run_one(args, item):
    label, g = item
    try:
        c, reports = _HANDLERS[args.command](args, label, g)
    except HypothesisError as exc:
        return EXIT_INVALID, [], f"{label}: hypothesis failed ({exc.hypothesis}): {exc}\n"
    message = ""
    if c == EXIT_INVALID:
        failed = [
            f"{name} ({h['reason']})" if "reason" in h else name
            for r in reports
            for name, h in r.get("hypotheses", {}).items()
            if not h["holds"]
        ]
        message = f"{label}: hypothesis failed: {', '.join(failed)}\n"
    return c, reports, message


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    code = EXIT_OK
    try:
        if args.command == "hom":
            c, reports = cmd_hom(args)
            code = max(code, c)
            for r in reports:
                _emit(r, args.json, out)
            return code
        graphs = list(read_graphs(args.source))
        if args.jobs > 1 and len(graphs) > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                results = list(pool.map(_run_one, [args] * len(graphs), graphs))
        else:
            results = [_run_one(args, item) for item in graphs]
        for c, reports, message in results:
            if message:
                err.write(message)
            code = max(code, c)
            for r in reports:
                _emit(r, args.json, out)
    except (InputError, GraphError, Graph6Error, OSError, json.JSONDecodeError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
