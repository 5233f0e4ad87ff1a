"""Splitting a graph around a shortest odd hole into gadgets, and colouring the
resulting ring.

Every vertex off the cycle must touch it.  Outside vertices that are
adjacent, or whose stretches of the cycle overlap, form one gadget.  A gadget
meets the rest of the graph only through the two cycle edges just outside
its stretch (its end edges), so it is summarised by which end-edge colour
relations it allows:

* ``a``: end edges must share a colour;
* ``d``: end edges must differ;
* ``b``: either, and no edge joins two of its outside vertices;
* ``c``: either, with such an edge.

A cycle vertex outside every gadget behaves like a ``d`` gadget of length 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..edgecolor import chromatic_index_backtracking, is_proper_edge_coloring
from ..errors import StructureViolation
from ..graph import Edge, Graph, OddCycle, build_graph, neighborhood_levels, norm

SAME, DIFF, ANY = "same", "diff", "any"
RELATION = {"a": SAME, "d": DIFF, "b": ANY, "c": ANY}


@dataclass(frozen=True)
class Gadget:
    """``start`` and ``length`` give the stretch of cycle positions covered
    (read cyclically); ``outside`` lists the off-cycle vertices."""

    kind: str
    start: int
    length: int
    outside: tuple[int, ...]

    def positions(self, p: int) -> list[int]:
        return [(self.start + k) % p for k in range(self.length)]

    @property
    def allows_same(self) -> bool:
        return self.kind != "d"

    @property
    def allows_different(self) -> bool:
        return self.kind != "a"


def _stretch(covered: set[int], p: int) -> tuple[int, int]:
    starts = [s for s in covered if (s - 1) % p not in covered]
    if len(covered) >= p or len(starts) != 1:
        raise StructureViolation("gadget stretch wraps the whole cycle or is not contiguous")
    return starts[0], len(covered)


def _minimal_cover(positions: list[int], p: int) -> set[int]:
    """Shortest cyclic interval covering ``positions``."""
    ps = sorted(set(positions))
    if len(ps) == 1:
        return {ps[0]}
    gaps = [((ps[(k + 1) % len(ps)] - ps[k]) % p, k) for k in range(len(ps))]
    size, k = max(gaps)
    start = ps[(k + 1) % len(ps)]
    span = (ps[k] - start) % p + 1
    return {(start + t) % p for t in range(span)}


def _local_graph(h: Graph, seq: list[int], g: Gadget):
    """The gadget as a standalone graph with its two end edges hanging off
    fresh pendant vertices.  Returns (graph, label map, in-edge, out-edge)."""
    p = len(seq)
    cyc = [seq[k] for k in g.positions(p)]
    verts = cyc + list(g.outside)
    label = {v: k for k, v in enumerate(verts)}
    edges = [(label[u], label[w]) for u in verts for w in h.adj[u] if w in label and label[u] < label[w]]
    pin, pout = len(verts), len(verts) + 1
    edges += [(pin, label[cyc[0]]), (label[cyc[-1]], pout)]
    local = build_graph(len(verts) + 2, edges)
    return local, label, norm(pin, label[cyc[0]]), norm(label[cyc[-1]], pout)


def _relation_ok(h, seq, g, same: bool) -> Optional[dict[Edge, int]]:
    local, _, e_in, e_out = _local_graph(h, seq, g)
    fixed = {e_in: 1, e_out: 1 if same else 2}
    return chromatic_index_backtracking(local, 3, fixed=fixed)


def gadget_decompose(h: Graph, q: OddCycle) -> list[Gadget]:
    """Gadgets around the induced odd cycle ``q`` in cyclic order.

    Raises :class:`StructureViolation` when some vertex is two steps from the
    cycle, an outside vertex has two outside neighbours, an outside vertex
    sees the cycle other than at one vertex or at ``v_i, v_{i+2}``, or a
    gadget admits no 3-edge-colouring at all.
    """
    seq = list(q.vertices)
    p = len(seq)
    pos = {v: k for k, v in enumerate(seq)}
    levels = neighborhood_levels(h, q)
    if len(levels) > 2:
        raise StructureViolation("a vertex lies two steps from the cycle", witness=(levels[2][0],))
    if sum(len(lv) for lv in levels) != h.n:
        raise StructureViolation("graph is not connected to the cycle")
    for k in range(p):
        for w in h.adj[seq[k]]:
            if w in pos and (pos[w] - k) % p not in (1, p - 1):
                raise StructureViolation("cycle has a chord", witness=(seq[k], w))
    first = levels[1] if len(levels) > 1 else []
    first_set = set(first)
    attach: dict[int, list[int]] = {}
    for w in first:
        on_q = sorted(pos[v] for v in h.adj[w] if v in pos)
        if len(on_q) > 2 or (len(on_q) == 2 and (on_q[1] - on_q[0]) % p not in (2, p - 2)):
            raise StructureViolation(f"vertex {w} sees the cycle at {on_q}", witness=(w,))
        mates = [x for x in h.adj[w] if x in first_set]
        if len(mates) > 1:
            raise StructureViolation(f"outside vertices {mates} share neighbour {w}", witness=(w, *mates))
        attach[w] = on_q

    # clusters: outside vertices joined by an edge
    groups: list[tuple[set[int], set[int]]] = []
    done = set()
    for w in first:
        if w in done:
            continue
        members = {w} | {x for x in h.adj[w] if x in first_set}
        done |= members
        cover = _minimal_cover([k for x in members for k in attach[x]], p)
        groups.append((members, cover))
    # merge clusters whose stretches overlap
    merged = True
    while merged:
        merged = False
        for a in range(len(groups)):
            for b in range(a + 1, len(groups)):
                if groups[a][1] & groups[b][1]:
                    members = groups[a][0] | groups[b][0]
                    cover = groups[a][1] | groups[b][1]
                    groups[a] = (members, cover)
                    del groups[b]
                    merged = True
                    break
            if merged:
                break

    gadgets = []
    for members, cover in groups:
        start, length = _stretch(cover, p)
        raw = Gadget("?", start, length, tuple(sorted(members)))
        same = _relation_ok(h, seq, raw, True) is not None
        diff = _relation_ok(h, seq, raw, False) is not None
        if same and diff:
            inner = any(x in first_set for w in members for x in h.adj[w])
            kind = "c" if inner else "b"
        elif same:
            kind = "a"
        elif diff:
            kind = "d"
        else:
            raise StructureViolation("gadget admits no 3-edge-colouring", witness=raw.outside)
        gadgets.append(Gadget(kind, start, length, raw.outside))
    gadgets.sort(key=lambda g: g.start)
    return gadgets


def _ring_items(p: int, gadgets: list[Gadget]) -> list[tuple[int, str, Optional[Gadget]]]:
    """Items in cyclic order as (start position, relation, gadget or None)."""
    covered = {}
    for g in gadgets:
        for k in g.positions(p):
            if k in covered:
                raise StructureViolation("gadgets overlap")
            covered[k] = g
    items = []
    k = 0
    # begin at a position that starts an item
    while k < p:
        if k in covered:
            g = covered[k]
            if g.start == k:
                items.append((k, RELATION[g.kind], g))
        else:
            items.append((k, DIFF, None))
        k += 1
    return items


def _solve_ring(relations: list[str]) -> Optional[list[int]]:
    """Colours ``E_0 .. E_{r-1}`` of the ring edges where item ``t`` sits
    between ``E_t`` and ``E_{t+1}`` (indices mod r), or None."""
    r = len(relations)
    # reach[t][c] = colour of E_{t-1} that led to E_t = c
    reach: list[dict[int, int]] = [{1: 0}]
    for t in range(r):
        nxt: dict[int, int] = {}
        for c in reach[-1]:
            for d in (1, 2, 3):
                rel = relations[t]
                if (rel == SAME and d != c) or (rel == DIFF and d == c):
                    continue
                nxt.setdefault(d, c)
        reach.append(nxt)
    if 1 not in reach[r]:
        return None
    colours = [0] * (r + 1)
    colours[r] = 1
    for t in range(r, 0, -1):
        colours[t - 1] = reach[t][colours[t]]
    return colours[:r]


def color_necklace(h: Graph, q: OddCycle, gadgets: list[Gadget]) -> Optional[dict[Edge, int]]:
    """A proper 3-edge-colouring assembled gadget by gadget, or None when the
    ring of end-edge relations cannot be satisfied.

    With no flexible gadget, the ring fails exactly when one item forces
    different end colours: one uncovered vertex among ``a`` gadgets, or all
    ``a`` gadgets plus a single ``d``.
    """
    seq = list(q.vertices)
    p = len(seq)
    items = _ring_items(p, gadgets)
    ring = _solve_ring([rel for _, rel, _ in items])
    if ring is None:
        return None
    col: dict[Edge, int] = {}
    r = len(items)
    for t, (start, _, g) in enumerate(items):
        c_in, c_out = ring[t], ring[(t + 1) % r]
        e_in = norm(seq[(start - 1) % p], seq[start])
        col[e_in] = c_in
        if g is None:
            continue
        local, label, l_in, l_out = _local_graph(h, seq, g)
        inner = chromatic_index_backtracking(local, 3, fixed={l_in: c_in, l_out: c_out})
        if inner is None:
            raise StructureViolation(f"gadget at {g.start} rejects its end colours", witness=g.outside)
        back = {k: v for v, k in label.items()}
        for (x, y), c in inner.items():
            if x in back and y in back:
                col[norm(back[x], back[y])] = c
    if not is_proper_edge_coloring(h, col, 3):
        raise StructureViolation("assembled necklace colouring is not proper")
    return col
