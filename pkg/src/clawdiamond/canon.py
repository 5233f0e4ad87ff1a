"""Canonical labelling by colour refinement plus individualisation.

Small graphs only (tens of vertices).  No automorphism pruning: every leaf
of the search tree is visited, which is fine for the subcubic graphs this
package deals with.
"""

from __future__ import annotations

from typing import Optional

from .graph import Graph


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition."""
    while True:
        where = {}
        for idx, cell in enumerate(cells):
            for v in cell:
                where[v] = idx
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sigs = {}
            for v in cell:
                sig = tuple(sorted(where[w] for w in g.adj[v]))
                sigs.setdefault(sig, []).append(v)
            if len(sigs) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for sig in sorted(sigs):
                new_cells.append(sigs[sig])
        cells = new_cells
        if not changed:
            return cells


def _certificate(g: Graph, order: list[int]) -> tuple:
    pos = {v: k for k, v in enumerate(order)}
    return tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges))


def canonical_labeling(g: Graph) -> list[int]:
    """``lab[v]`` is the canonical position of vertex ``v``."""
    if g.n == 0:
        return []
    by_deg: dict[int, list[int]] = {}
    for v in range(g.n):
        by_deg.setdefault(g.degree(v), []).append(v)
    start = _refine(g, [by_deg[d] for d in sorted(by_deg)])
    best_cert: Optional[tuple] = None
    best_order: list[int] = []
    stack = [start]
    while stack:
        cells = stack.pop()
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(g, order)
            if best_cert is None or cert < best_cert:
                best_cert, best_order = cert, order
            continue
        cell = cells[target]
        for v in reversed(cell):
            rest = [w for w in cell if w != v]
            branch = cells[:target] + [[v], rest] + cells[target + 1:]
            stack.append(_refine(g, branch))
    lab = [0] * g.n
    for k, v in enumerate(best_order):
        lab[v] = k
    return lab


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonically relabelled graph."""
    from .formats import to_graph6

    return to_graph6(canonical_graph(g))


def isomorphism(a: Graph, b: Graph) -> Optional[list[int]]:
    """A vertex map ``phi`` with ``phi[v]`` in ``b`` for ``v`` in ``a``, or None."""
    if a.n != b.n or a.m != b.m:
        return None
    la, lb = canonical_labeling(a), canonical_labeling(b)
    if a.relabel(la) != b.relabel(lb):
        return None
    inv_b = [0] * b.n
    for v, k in enumerate(lb):
        inv_b[k] = v
    return [inv_b[la[v]] for v in range(a.n)]


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return isomorphism(a, b) is not None
