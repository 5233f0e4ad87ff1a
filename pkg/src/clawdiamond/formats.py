"""graph6 and edge-list serialisation."""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Optional

from .errors import GraphError, ParseError
from .graph import Graph, build_graph


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adjsets[j]
        for i in range(j):
            bits.append(1 if i in row else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_n(g.n) + "".join(body)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(c < 0 or c > 63 for c in codes):
        raise ParseError("graph6 string has characters outside 63..126")
    if codes[0] != 63:
        n, rest = codes[0], codes[1:]
    elif len(codes) > 1 and codes[1] == 63:
        if len(codes) < 8:
            raise ParseError("truncated graph6 size field")
        n = 0
        for c in codes[2:8]:
            n = (n << 6) | c
        rest = codes[8:]
    else:
        if len(codes) < 4:
            raise ParseError("truncated graph6 size field")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        rest = codes[4:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise ParseError(f"graph6 body has {len(rest)} bytes, expected {need}")
    bits = []
    for c in rest:
        bits.extend((c >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise ParseError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        body = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise ParseError(f"non-integer token: {exc}") from None
    if len(header) != 2:
        raise ParseError("first line must be 'n m'")
    n, m = header
    if len(body) != m:
        raise ParseError(f"header declares {m} edges, found {len(body)}")
    if any(len(r) != 2 for r in body):
        raise ParseError("edge lines must have exactly two vertices")
    try:
        return build_graph(n, body)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def detect_format(path: Optional[str], text: str) -> str:
    if path:
        suffix = Path(path).suffix.lower()
        if suffix in (".g6", ".graph6"):
            return "graph6"
        if suffix in (".txt", ".el", ".edges", ".edgelist"):
            return "edgelist"
    first = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")), "")
    if len(first.split()) == 1 and not first.isdigit():
        return "graph6"
    return "edgelist"


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return from_graph6(text.strip().splitlines()[0] if text.strip() else "")
    if fmt == "edgelist":
        return from_edgelist(text)
    raise ParseError(f"unknown format {fmt!r}")


def dump_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    return to_edgelist(g)


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(to_graph6(g).encode()).hexdigest()[:16]
