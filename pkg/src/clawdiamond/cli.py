"""Command-line front end.

Exit codes: 0 colourable (or success), 1 certified not 3-colourable (or a
rejected certificate / failed check), 2 out of class or error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from .certificate import to_certificate, to_json, to_record, verify
from .decide import decide_auto, decide_n12k, decide_n113, decide_n222_no_c5, decide_n222_with_c5, decide_root
from .decide.verdict import COLORABLE, OUT_OF_CLASS
from .errors import GraphError
from .families import FamilyId, gen_family
from .formats import detect_format, dump_graph, parse_graph
from .graph import Graph
from .patterns import find_embedding, parse_pattern
from .reductions import reduce

EXIT_OK, EXIT_NOT_COLORABLE, EXIT_ERROR = 0, 1, 2

VERTEX_DECIDERS = {"auto": decide_auto, "n113": decide_n113}
EDGE_DECIDERS = {"auto": decide_root, "n222": decide_n222_no_c5, "n222-c5": decide_n222_with_c5}


def _read_graph(path: Optional[str], fmt: Optional[str]) -> Graph:
    if path in (None, "-"):
        text, path = sys.stdin.read(), None
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_graph(text, fmt or detect_format(path, text))


def _exit_for(verdict) -> int:
    if verdict.kind == COLORABLE:
        return EXIT_OK
    if verdict.kind == OUT_OF_CLASS:
        return EXIT_ERROR
    return EXIT_NOT_COLORABLE


def _decide(g: Graph, args) -> object:
    if args.edges:
        return EDGE_DECIDERS[args.theorem if args.theorem in EDGE_DECIDERS else "auto"](g)
    if args.theorem == "n12k":
        return decide_n12k(g, args.k)
    if args.theorem not in VERTEX_DECIDERS:
        raise GraphError(f"theorem {args.theorem!r} applies to root graphs; add --edges")
    return VERTEX_DECIDERS[args.theorem](g)


def cmd_decide(args) -> int:
    g = _read_graph(args.input, args.format)
    v = _decide(g, args)
    sys.stdout.write(to_json(g, v) + "\n" if args.json else to_certificate(g, v))
    return _exit_for(v)


def cmd_color(args) -> int:
    g = _read_graph(args.input, args.format)
    v = _decide(g, args)
    if args.json:
        rec = to_record(g, v)
        print(json.dumps({"coloring": rec.get("coloring"), "verdict": v.kind}, sort_keys=True))
    elif v.kind != COLORABLE:
        print("NONE")
    elif v.side == "vertex":
        for x, c in sorted(v.vertex_coloring.items()):
            print(x, c)
    else:
        for (a, b), c in sorted(v.edge_coloring.items()):
            print(a, b, c)
    return _exit_for(v)


def cmd_detect(args) -> int:
    g = _read_graph(args.input, args.format)
    pattern, induced = parse_pattern(args.pattern)
    if args.subgraph:
        induced = False
    hit = find_embedding(pattern, g, induced, max_pattern=max(12, pattern.n))
    if args.json:
        print(json.dumps({"pattern": args.pattern, "induced": induced,
                          "mapping": list(hit.mapping) if hit else None}, sort_keys=True))
    elif hit is None:
        print("NONE")
    else:
        print(("induced " if induced else "subgraph ") + " ".join(map(str, hit.mapping)))
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = _read_graph(args.input, args.format)
    reduced, trace = reduce(g)
    out_fmt = args.format or "edgelist"
    if args.json:
        print(json.dumps({"reduced": dump_graph(reduced, "graph6").strip(), "kept": list(trace.kept),
                          "trace": trace.to_text().splitlines()}, sort_keys=True))
    else:
        sys.stdout.write(dump_graph(reduced, out_fmt))
        if args.emit_trace is None:
            sys.stdout.write("# trace\n" + trace.to_text())
    if args.emit_trace:
        with open(args.emit_trace, "w") as fh:
            fh.write(trace.to_text())
    return EXIT_OK


def cmd_generate(args) -> int:
    fid = FamilyId(args.family, args.i)
    sys.stdout.write(dump_graph(gen_family(fid), args.format or "edgelist"))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.graph, args.format)
    with open(args.certificate) as fh:
        ok, msg = verify(g, fh.read())
    if args.json:
        print(json.dumps({"ok": ok, "message": msg}, sort_keys=True))
    else:
        print("OK" if ok else f"REJECTED: {msg}")
    return EXIT_OK if ok else EXIT_NOT_COLORABLE


def cmd_crossvalidate(args) -> int:
    from .oracle import cross_validate

    report = cross_validate(args.max_n, jobs=args.jobs)
    if args.json:
        for r in report.rows:
            print(json.dumps({"graph": r.form, "n": r.n, "m": r.m, "chromatic_index": r.chromatic_index,
                              "s333_free": r.s333_free, "c5": r.has_c5, "overfull": r.overfull,
                              "family": r.family, "verdict": r.verdict, "agrees": r.agrees}, sort_keys=True))
        print(json.dumps({"graphs": len(report.rows), "exceptional": len(report.exceptional),
                          "fallbacks": len(report.fallbacks), "violations": report.violations}, sort_keys=True))
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK if not report.violations else EXIT_NOT_COLORABLE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clawdiamond", description="3-colouring (claw, diamond)-free graphs")
    p.add_argument("--json", action="store_true", help="line-delimited JSON output")
    p.add_argument("-v", "--verbose", action="store_true", help="log decisions to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("input", nargs="?", help="graph file (graph6 or edge list); stdin when omitted")
        sp.add_argument("--format", choices=("graph6", "edgelist"), help="force the input format")

    for name, helptext in (("decide", "print a verdict certificate"), ("color", "print a 3-colouring or NONE")):
        sp = sub.add_parser(name, help=helptext)
        graph_input(sp)
        sp.add_argument("--edges", action="store_true", help="edge-colour the input (root side)")
        sp.add_argument("--theorem", default="auto", choices=("auto", "n113", "n12k", "n222", "n222-c5"))
        sp.add_argument("--k", type=int, default=2, help="path length for --theorem n12k")

    sp = sub.add_parser("detect", help="find a pattern")
    graph_input(sp)
    sp.add_argument("--pattern", required=True, help="claw, diamond, k4, cN, net:i,j,k or spider:i,j,k")
    sp.add_argument("--subgraph", action="store_true", help="search for a not necessarily induced copy")

    sp = sub.add_parser("reduce", help="apply the reductions")
    graph_input(sp)
    sp.add_argument("--emit-trace", metavar="FILE", help="write the trace to FILE instead of stdout")

    sp = sub.add_parser("generate", help="print a family member")
    sp.add_argument("--family", required=True)
    sp.add_argument("--i", type=int, default=None)
    sp.add_argument("--format", choices=("graph6", "edgelist"))

    sp = sub.add_parser("verify", help="check a certificate against a graph")
    sp.add_argument("graph")
    sp.add_argument("certificate")
    sp.add_argument("--format", choices=("graph6", "edgelist"))

    sp = sub.add_parser("crossvalidate", help="check the deciders against exhaustive search")
    sp.add_argument("--max-n", type=int, default=9)
    sp.add_argument("--jobs", type=int, default=1)
    return p


COMMANDS = {
    "decide": cmd_decide,
    "color": cmd_color,
    "detect": cmd_detect,
    "reduce": cmd_reduce,
    "generate": cmd_generate,
    "verify": cmd_verify,
    "crossvalidate": cmd_crossvalidate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
