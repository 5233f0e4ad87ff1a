"""3-colouring an odd hole and extending it to attached triangles."""

from __future__ import annotations

from typing import Sequence

from ..errors import BadLength, StructureViolation
from ..graph import Graph, OddCycle


def color_odd_hole(p: int) -> list[int]:
    """Colours of ``v_1 .. v_p`` on an odd cycle, by residue of ``p`` mod 3.

    0: ``1,2,3`` repeated.  1: ``1,2,1,3`` then ``1,2,3`` repeated.
    2: ``1,2,1,3,1,2,1,3`` then ``1,2,3`` repeated; ``p = 5`` is too short for
    that prefix and gets ``1,2,1,2,3``.
    """
    if p < 5 or p % 2 == 0:
        raise BadLength(f"need an odd length >= 5, got {p}")
    if p % 3 == 0:
        return [1, 2, 3] * (p // 3)
    if p % 3 == 1:
        return [1, 2, 1, 3] + [1, 2, 3] * ((p - 4) // 3)
    if p == 5:
        return [1, 2, 1, 2, 3]
    return [1, 2, 1, 3, 1, 2, 1, 3] + [1, 2, 3] * ((p - 8) // 3)


def pair_property_violations(colors: Sequence[int]) -> list[int]:
    """Indices ``i`` where ``{c_i, c_{i+1}} == {c_{i+2}, c_{i+3}}`` cyclically."""
    p = len(colors)
    return [
        i
        for i in range(p)
        if {colors[i], colors[(i + 1) % p]} == {colors[(i + 2) % p], colors[(i + 3) % p]}
    ]


def extend_to_first_neighborhood(g: Graph, q: OddCycle, qc: dict[int, int]) -> dict[int, int]:
    """Colour every vertex next to ``q`` from a proper 3-colouring ``qc`` of it.

    Each outside neighbour must see exactly two consecutive cycle vertices,
    so its colour is forced; adjacent outside neighbours must end up with
    different forced colours.  Returns the colouring of ``q`` plus its
    neighbours.
    """
    seq = list(q.vertices)
    p = len(seq)
    pos = {v: k for k, v in enumerate(seq)}
    for k in range(p):
        a, b = seq[k], seq[(k + 1) % p]
        if qc.get(a) == qc.get(b) or qc.get(a) not in (1, 2, 3):
            raise StructureViolation(f"cycle colouring is not a proper 3-colouring at {a}-{b}")
    out = dict((v, qc[v]) for v in seq)
    first = sorted({w for v in seq for w in g.adj[v] if w not in pos})
    for w in first:
        on_q = sorted(pos[v] for v in g.adj[w] if v in pos)
        if len(on_q) != 2 or (on_q[1] - on_q[0]) % p not in (1, p - 1):
            raise StructureViolation(f"vertex {w} does not see exactly two consecutive cycle vertices", witness=(w,))
        out[w] = ({1, 2, 3} - {qc[seq[on_q[0]]], qc[seq[on_q[1]]]}).pop()
    first_set = set(first)
    for w in first:
        mates = [x for x in g.adj[w] if x in first_set]
        if len(mates) > 1:
            raise StructureViolation(f"vertex {w} has {len(mates)} neighbours next to the cycle", witness=(w, *mates))
        for x in mates:
            if out[x] == out[w]:
                raise StructureViolation(f"adjacent vertices {w}, {x} are forced to the same colour", witness=(w, x))
    return out
