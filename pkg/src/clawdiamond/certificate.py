"""Line-oriented certificates for verdicts, and a checker that trusts none of
the deciding code.

Layout::

    COLORABLE 3 | K4 | EXCEPTIONAL <family> | NOT_COLORABLE <reason> | OUT_OF_CLASS <pattern>
    side vertex|edge
    graph <graph6 of the input>
    hash <16 hex digits>
    provenance <free text>
    vertex <v> <colour>            (colourable, vertex side)
    edge <u> <v> <colour>          (colourable, edge side)
    pattern <graph6>               (everything else)
    embedding induced|subgraph <host vertex of pattern vertex 0> ...

The checker re-derives everything it needs: properness, the embedding, the
identity of a named pattern, and non-3-colourability of the pattern by its
own search.
"""

from __future__ import annotations

import json
from typing import Optional

from .decide.verdict import COLORABLE, CONTAINS_K4, EXCEPTIONAL, NOT_COLORABLE, OUT_OF_CLASS, Verdict
from .errors import GraphError, ParseError
from .families import FamilyId, gen_family, is_overfull_c9_chords4
from .formats import from_graph6, graph_hash, to_graph6
from .graph import Graph, build_graph, complete_graph

HEADERS = {COLORABLE: "COLORABLE", CONTAINS_K4: "K4", EXCEPTIONAL: "EXCEPTIONAL",
           NOT_COLORABLE: "NOT_COLORABLE", OUT_OF_CLASS: "OUT_OF_CLASS"}
KIND_OF = {v: k for k, v in HEADERS.items()}


def to_certificate(g: Graph, v: Verdict) -> str:
    head = HEADERS[v.kind]
    if v.kind == COLORABLE:
        head += " 3"
    elif v.kind == EXCEPTIONAL:
        head += f" {v.family}"
    elif v.kind in (NOT_COLORABLE, OUT_OF_CLASS):
        head += f" {v.pattern_name}"
    lines = [head, f"side {v.side}", f"graph {to_graph6(g)}", f"hash {graph_hash(g)}",
             f"provenance {v.provenance}"]
    if v.kind == COLORABLE:
        if v.side == "vertex":
            lines += [f"vertex {x} {c}" for x, c in sorted(v.vertex_coloring.items())]
        else:
            lines += [f"edge {a} {b} {c}" for (a, b), c in sorted(v.edge_coloring.items())]
    else:
        lines.append(f"pattern {to_graph6(v.pattern)}")
        mode = "induced" if v.embedding.induced else "subgraph"
        lines.append(f"embedding {mode} " + " ".join(map(str, v.embedding.mapping)))
    return "\n".join(lines) + "\n"


def to_record(g: Graph, v: Verdict) -> dict:
    """The same content as a JSON-ready dict."""
    rec = {"verdict": v.kind, "side": v.side, "graph": to_graph6(g), "hash": graph_hash(g),
           "provenance": v.provenance}
    if v.kind == COLORABLE:
        if v.side == "vertex":
            rec["coloring"] = [[x, c] for x, c in sorted(v.vertex_coloring.items())]
        else:
            rec["coloring"] = [[a, b, c] for (a, b), c in sorted(v.edge_coloring.items())]
    else:
        rec["family"] = str(v.family) if v.family else None
        rec["pattern_name"] = v.pattern_name
        rec["pattern"] = to_graph6(v.pattern)
        rec["embedding"] = {"induced": v.embedding.induced, "mapping": list(v.embedding.mapping)}
    return rec


def to_json(g: Graph, v: Verdict) -> str:
    return json.dumps(to_record(g, v), sort_keys=True)


# ----------------------------------------------------------------------
# independent checking
# ----------------------------------------------------------------------


def _three_colourable(g: Graph) -> bool:
    """Vertex 3-colourability by saturation-ordered backtracking."""
    colour = [0] * g.n
    nbrs = [set(g.adj[v]) for v in range(g.n)]

    def options(v):
        used = {colour[w] for w in nbrs[v]}
        return [c for c in (1, 2, 3) if c not in used]

    def go(left: int) -> bool:
        if left == 0:
            return True
        best, best_opts = -1, None
        for v in range(g.n):
            if colour[v]:
                continue
            opts = options(v)
            if best_opts is None or len(opts) < len(best_opts) or (
                len(opts) == len(best_opts) and len(nbrs[v]) > len(nbrs[best])
            ):
                best, best_opts = v, opts
                if not opts:
                    return False
        # symmetry: the first vertex coloured may take colour 1 only
        if left == g.n:
            best_opts = best_opts[:1]
        for c in best_opts:
            colour[best] = c
            if go(left - 1):
                return True
        colour[best] = 0
        return False

    return go(g.n)


def _edge_adjacency(h: Graph) -> Graph:
    edges = sorted(h.edges)
    at: dict[int, list[int]] = {}
    for k, (a, b) in enumerate(edges):
        at.setdefault(a, []).append(k)
        at.setdefault(b, []).append(k)
    pairs = {(x, y) for ks in at.values() for x in ks for y in ks if x < y}
    return build_graph(len(edges), sorted(pairs))


def _named_pattern(name: str) -> Optional[tuple[Graph, bool]]:
    """Forbidden pattern for an out-of-class name, and whether the match must
    be induced."""
    from .patterns import parse_pattern

    if name == "degree4":
        return build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)]), False
    if name == "triangle":
        return complete_graph(3), False
    try:
        pat, induced = parse_pattern(name)
    except GraphError:
        return None
    return pat, induced


def _embeds(pattern: Graph, host: Graph, mapping: list[int], induced: bool) -> Optional[str]:
    if len(mapping) != pattern.n or len(set(mapping)) != len(mapping):
        return "embedding is not injective on the pattern vertices"
    if any(not 0 <= x < host.n for x in mapping):
        return "embedding leaves the host"
    hset = {frozenset(e) for e in host.edges}
    for a in range(pattern.n):
        for b in range(a + 1, pattern.n):
            there = frozenset((mapping[a], mapping[b])) in hset
            if pattern.has_edge(a, b) and not there:
                return f"pattern edge {a}-{b} is missing in the host"
            if induced and there and not pattern.has_edge(a, b):
                return f"host has an extra edge on pattern vertices {a}, {b}"
    return None


def _same_graph(a: Graph, b: Graph) -> bool:
    return a.n == b.n and set(a.edges) == set(b.edges)


def _isomorphic(a: Graph, b: Graph) -> bool:
    from .canon import are_isomorphic

    return are_isomorphic(a, b)


def parse_certificate(text: str) -> dict:
    lines = [ln.rstrip("\n") for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty certificate")
    head, _, arg = lines[0].partition(" ")
    if head not in KIND_OF:
        raise ParseError(f"unknown verdict {head!r}")
    cert = {"kind": KIND_OF[head], "arg": arg.strip(), "vertex": [], "edge": []}
    for ln in lines[1:]:
        key, _, rest = ln.partition(" ")
        if key in ("side", "graph", "hash", "provenance", "pattern"):
            cert[key] = rest.strip()
        elif key == "vertex":
            cert["vertex"].append(tuple(int(x) for x in rest.split()))
        elif key == "edge":
            cert["edge"].append(tuple(int(x) for x in rest.split()))
        elif key == "embedding":
            mode, *rest_ = rest.split()
            cert["embedding"] = (mode == "induced", [int(x) for x in rest_])
        else:
            raise ParseError(f"unknown certificate line {ln!r}")
    return cert


def verify(g: Graph, text: str) -> tuple[bool, str]:
    """Check a certificate against ``g``.  Returns (ok, message)."""
    try:
        cert = parse_certificate(text)
    except (ParseError, ValueError) as exc:
        return False, f"unreadable certificate: {exc}"
    if cert.get("hash") != graph_hash(g) or cert.get("graph") != to_graph6(g):
        return False, "certificate is for a different graph"
    side = cert.get("side")
    if side not in ("vertex", "edge"):
        return False, "missing side"
    kind = cert["kind"]

    if kind == COLORABLE:
        if cert["arg"] != "3":
            return False, "colourable certificates must use 3 colours"
        if side == "vertex":
            col = {}
            for row in cert["vertex"]:
                if len(row) != 2:
                    return False, "bad vertex line"
                col[row[0]] = row[1]
            if set(col) != set(range(g.n)):
                return False, "colouring is not total"
            if any(c not in (1, 2, 3) for c in col.values()):
                return False, "colour outside 1..3"
            for a, b in g.edges:
                if col[a] == col[b]:
                    return False, f"edge {a}-{b} is monochromatic"
            return True, "OK"
        col = {}
        for row in cert["edge"]:
            if len(row) != 3:
                return False, "bad edge line"
            a, b, c = row
            col[frozenset((a, b))] = c
        if set(col) != {frozenset(e) for e in g.edges}:
            return False, "colouring does not cover exactly the edges"
        if any(c not in (1, 2, 3) for c in col.values()):
            return False, "colour outside 1..3"
        for v in range(g.n):
            seen = [col[frozenset((v, w))] for w in g.adj[v]]
            if len(seen) != len(set(seen)):
                return False, f"two edges at {v} share a colour"
        return True, "OK"

    if "pattern" not in cert or "embedding" not in cert:
        return False, "witness missing"
    try:
        pattern = from_graph6(cert["pattern"])
    except (ParseError, GraphError) as exc:
        return False, f"bad pattern: {exc}"
    induced, mapping = cert["embedding"]
    problem = _embeds(pattern, g, mapping, induced)
    if problem:
        return False, problem

    if kind == OUT_OF_CLASS:
        named = _named_pattern(cert["arg"])
        if named is None:
            return False, f"unknown forbidden pattern {cert['arg']!r}"
        ref, need_induced = named
        if not _same_graph(pattern, ref):
            return False, "pattern does not match its name"
        if need_induced and not induced:
            return False, "forbidden pattern must be induced"
        return True, "OK"

    if kind == CONTAINS_K4:
        if not _same_graph(pattern, complete_graph(4)):
            return False, "pattern is not K4"
        return True, "OK"

    if kind == EXCEPTIONAL:
        try:
            fid = FamilyId.parse(cert["arg"])
        except GraphError as exc:
            return False, str(exc)
        if fid.kind == "OverfullC9Chords4":
            root = pattern
            if side == "vertex":
                from .linegraph import root_graph

                try:
                    root = root_graph(pattern)[0]
                except GraphError:
                    return False, "pattern is not a line graph"
            if not is_overfull_c9_chords4(root):
                return False, "pattern is not a 9-cycle with four chords"
        elif not _isomorphic(pattern, gen_family(fid)):
            return False, f"pattern is not {fid}"

    check = pattern if side == "vertex" else _edge_adjacency(pattern)
    if _three_colourable(check):
        return False, "pattern is 3-colourable"
    return True, "OK"


def check_verdict(g: Graph, v: Verdict) -> tuple[bool, str]:
    """Round trip through the text form and :func:`verify`."""
    return verify(g, to_certificate(g, v))
