"""Colourability-preserving reductions of a subcubic triangle-free root graph.

Four rules are applied until none fires, in this priority order with the
lowest-index witness first:

* ``R1`` delete a vertex of degree 1;
* ``R2`` delete two adjacent vertices of degree 2;
* ``R3`` delete an induced 4-cycle whose two opposite vertices have degree 2;
* ``R4`` delete every cut-edge (the graph falls apart into bridgeless blocks).

Every rule keeps 3-edge-colourability in both directions, and
:func:`lift_coloring` undoes the steps constructively.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .errors import LiftImpossible
from .graph import Edge, Graph, bridges, build_graph, components, norm


@dataclass(frozen=True)
class Step:
    kind: str  # "R1" | "R2" | "R3" | "R4"
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class ReductionTrace:
    """Steps in application order.  ``kept[k]`` is the original label of
    vertex ``k`` of the reduced graph."""

    steps: tuple[Step, ...]
    kept: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def to_text(self) -> str:
        lines = [f"{s.kind} " + " ".join(map(str, s.vertices)) for s in self.steps]
        return "\n".join(lines) + ("\n" if lines else "")


class _Work:
    """Mutable adjacency used while reducing."""

    def __init__(self, h: Graph):
        self.alive = set(range(h.n))
        self.nb = [set(a) for a in h.adj]

    def deg(self, v):
        return len(self.nb[v])

    def remove_vertices(self, vs) -> tuple[Edge, ...]:
        gone = set()
        for v in vs:
            for w in self.nb[v]:
                gone.add(norm(v, w))
        for v in vs:
            for w in list(self.nb[v]):
                self.nb[w].discard(v)
            self.nb[v].clear()
            self.alive.discard(v)
        return tuple(sorted(gone))

    def remove_edge(self, u, v):
        self.nb[u].discard(v)
        self.nb[v].discard(u)

    def graph(self, n) -> Graph:
        return build_graph(n, [(u, w) for u in self.alive for w in self.nb[u] if u < w])


def _find_r1(work: _Work) -> Optional[tuple[int, ...]]:
    for v in sorted(work.alive):
        if work.deg(v) == 1:
            return (v,)
    return None


def _find_r2(work: _Work) -> Optional[tuple[int, ...]]:
    for u in sorted(work.alive):
        if work.deg(u) != 2:
            continue
        for v in sorted(work.nb[u]):
            if v > u and work.deg(v) == 2:
                return (u, v)
    return None


def _find_r3(work: _Work) -> Optional[tuple[int, ...]]:
    best = None
    for w1 in sorted(work.alive):
        if work.deg(w1) != 2:
            continue
        a, b = sorted(work.nb[w1])
        if b in work.nb[a]:
            continue
        for w3 in sorted(work.nb[a] & work.nb[b]):
            if w3 == w1 or work.deg(w3) != 2 or w3 in work.nb[w1]:
                continue
            cand = tuple(sorted((w1, a, w3, b)))
            if best is None or cand < best:
                best = cand
    return best


def _live_bridges(work: _Work, n: int) -> list[Edge]:
    return bridges(work.graph(n))


def reduce(h: Graph) -> tuple[Graph, ReductionTrace]:
    """Apply the four reductions exhaustively.

    The reduced graph keeps surviving vertices (isolated ones included) in
    ascending original order; its components with edges are the blocks.
    """
    work = _Work(h)
    steps: list[Step] = []
    while True:
        for kind, finder in (("R1", _find_r1), ("R2", _find_r2), ("R3", _find_r3)):
            hit = finder(work)
            if hit is not None:
                steps.append(Step(kind, hit, work.remove_vertices(hit)))
                break
        else:
            cut = _live_bridges(work, h.n)
            if not cut:
                break
            for u, v in cut:
                work.remove_edge(u, v)
                steps.append(Step("R4", (u, v), ((u, v),)))
    kept = tuple(sorted(work.alive))
    full = work.graph(h.n)
    reduced, _ = full.induced(kept)
    return reduced, ReductionTrace(tuple(steps), kept)


def blocks(reduced: Graph) -> list[list[int]]:
    """Vertex sets of the reduced graph's components that carry edges."""
    return [c for c in components(reduced) if len(c) > 1]


def trace_from_text(h: Graph, text: str) -> ReductionTrace:
    """Rebuild a trace from :meth:`ReductionTrace.to_text` by replaying it."""
    work = _Work(h)
    steps = []
    for raw in text.splitlines():
        parts = raw.split()
        if not parts:
            continue
        kind, vs = parts[0], tuple(int(x) for x in parts[1:])
        if kind == "R4":
            u, v = vs
            work.remove_edge(u, v)
            steps.append(Step(kind, vs, (norm(u, v),)))
        else:
            steps.append(Step(kind, vs, work.remove_vertices(vs)))
    return ReductionTrace(tuple(steps), tuple(sorted(work.alive)))


def _colour_local(col: dict[Edge, int], nb: list[set[int]], new_edges: list[Edge]) -> bool:
    """Colour ``new_edges`` with 1..3 consistently with ``col`` by brute force
    (at most six edges)."""
    for combo in product((1, 2, 3), repeat=len(new_edges)):
        trial = dict(zip(new_edges, combo))
        ok = True
        for (u, v), c in trial.items():
            for x in (u, v):
                for w in nb[x]:
                    e = norm(x, w)
                    if e == (u, v) or e not in col and e not in trial:
                        continue
                    if (trial[e] if e in trial else col[e]) == c:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            col.update(trial)
            return True
    return False


def lift_coloring(h: Graph, trace: ReductionTrace, ec: dict[Edge, int]) -> dict[Edge, int]:
    """Extend a proper 3-edge-colouring of the reduced graph to all of ``h``.

    ``ec`` is keyed by reduced-graph labels.
    """
    kept = trace.kept
    col = {norm(kept[u], kept[v]): c for (u, v), c in ec.items()}
    if any(c not in (1, 2, 3) for c in col.values()):
        raise LiftImpossible("lift needs colours from 1..3")
    nb: list[set[int]] = [set() for _ in range(h.n)]
    for u, v in col:
        nb[u].add(v)
        nb[v].add(u)
    for step in reversed(trace.steps):
        for u, v in step.edges:
            nb[u].add(v)
            nb[v].add(u)
        if step.kind == "R4":
            (u, v), = step.edges
            _restore_bridge(col, nb, u, v)
        elif not _colour_local(col, nb, list(step.edges)):
            raise LiftImpossible(f"cannot recolour {step.kind} at {step.vertices}")
    return col


def _restore_bridge(col, nb, u, v):
    used_u = {col[norm(u, w)] for w in nb[u] if w != v and norm(u, w) in col}
    c = min({1, 2, 3} - used_u)
    used_v = {col[norm(v, w)] for w in nb[v] if w != u and norm(v, w) in col}
    if c in used_v:
        d = min({1, 2, 3} - used_v)
        # swap c and d on v's side of the bridge
        side = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for w in nb[x]:
                if (x, w) in ((u, v), (v, u)) or norm(x, w) not in col:
                    continue
                if w not in side:
                    side.add(w)
                    stack.append(w)
        if u in side:
            raise LiftImpossible(f"({u}, {v}) is not a bridge of the partial graph")
        for e in list(col):
            if e[0] in side and col[e] in (c, d):
                col[e] = d if col[e] == c else c
    col[norm(u, v)] = c
