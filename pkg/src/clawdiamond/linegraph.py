"""Line graphs, root reconstruction for (claw, diamond, K4)-free graphs, and
moving colourings between a root graph and its line graph."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import AmbiguousRoot, ImproperInput, NotInClass
from .graph import Edge, Graph, build_graph, complete_graph, is_connected, norm
from .patterns import find_claw, find_diamond, find_k4


@dataclass(frozen=True)
class EdgeVertexMap:
    """``forward[e]`` is the line-graph vertex of root edge ``e``;
    ``backward[x]`` is the root edge of line-graph vertex ``x``."""

    forward: dict[Edge, int]
    backward: tuple[Edge, ...]


def line_graph(h: Graph) -> tuple[Graph, EdgeVertexMap]:
    """Line graph with one vertex per edge of ``h`` in ``h.edges`` order."""
    backward = h.edges
    forward = {e: k for k, e in enumerate(backward)}
    edges = []
    for v in range(h.n):
        incident = [forward[norm(v, w)] for w in h.adj[v]]
        edges.extend(combinations(sorted(incident), 2))
    return build_graph(len(backward), edges), EdgeVertexMap(forward, backward)


def _maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Maximal cliques of a K4-free graph: triangles, uncovered edges, and
    isolated vertices."""
    cliques: list[tuple[int, ...]] = []
    in_triangle = set()
    for u, v in g.edges:
        for w in g.adjsets[u] & g.adjsets[v]:
            if w > v:
                cliques.append((u, v, w))
                in_triangle.update({norm(u, v), norm(u, w), norm(v, w)})
    cliques.extend(e for e in g.edges if e not in in_triangle)
    cliques.extend((v,) for v in range(g.n) if g.degree(v) == 0)
    return cliques


def root_graph(g: Graph, allow_star: bool = False) -> tuple[Graph, EdgeVertexMap]:
    """Rebuild the subcubic triangle-free ``h`` with ``L(h) = g``.

    Every vertex of a (claw, diamond, K4)-free graph lies in at most two
    maximal cliques; cliques become root vertices and each line-graph vertex
    becomes the root edge joining its two cliques (a private pendant vertex
    stands in for a missing second clique).

    ``K3`` is the line graph of both ``K3`` and ``K_{1,3}``; it raises
    :class:`AmbiguousRoot` unless ``allow_star`` picks the star.
    """
    if g.n == 0:
        return Graph(0, ()), EdgeVertexMap({}, ())
    if not is_connected(g):
        raise NotInClass("root reconstruction needs a connected graph")
    if g == complete_graph(3) and not allow_star:
        raise AmbiguousRoot("K3 is the line graph of both K3 and K_{1,3}")
    for finder, name in ((find_k4, "K4"), (find_diamond, "diamond"), (find_claw, "claw")):
        hit = finder(g)
        if hit is not None:
            raise NotInClass(f"graph contains an induced {name}", witness=(name, hit))

    cliques = _maximal_cliques(g)
    member: list[list[int]] = [[] for _ in range(g.n)]
    for idx, clique in enumerate(cliques):
        for v in clique:
            member[v].append(idx)
    nxt = len(cliques)
    ends: list[tuple[int, int]] = []
    for v in range(g.n):
        cs = member[v]
        if len(cs) > 2:
            raise NotInClass(f"vertex {v} lies in {len(cs)} maximal cliques")
        if len(cs) == 1:
            cs = [cs[0], nxt]
            nxt += 1
        ends.append((cs[0], cs[1]))
    h = build_graph(nxt, ends)
    forward = {norm(a, b): v for v, (a, b) in enumerate(ends)}
    backward = tuple(norm(a, b) for a, b in ends)
    lg, _ = line_graph(h)
    # line_graph numbers vertices by sorted root edge; compare through the map
    if lg.m != g.m or any(
        not lg.has_edge(h.edge_index[backward[u]], h.edge_index[backward[v]]) for u, v in g.edges
    ):
        raise NotInClass("clique cover does not reproduce the graph as a line graph")
    return h, EdgeVertexMap(forward, backward)


def _check_edge_proper(h: Graph, ec: dict[Edge, int]) -> None:
    if set(ec) != set(h.edges):
        raise ImproperInput("edge colouring is not total on the root graph")
    for v in range(h.n):
        seen = [ec[norm(v, w)] for w in h.adj[v]]
        if len(seen) != len(set(seen)):
            raise ImproperInput(f"edge colouring clashes at vertex {v}")


def transfer_edge_to_vertex_coloring(
    h: Graph, emap: EdgeVertexMap, ec: dict[Edge, int]
) -> dict[int, int]:
    _check_edge_proper(h, ec)
    return {emap.forward[e]: c for e, c in ec.items()}


def transfer_vertex_to_edge_coloring(
    g: Graph, emap: EdgeVertexMap, vc: dict[int, int]
) -> dict[Edge, int]:
    if set(vc) != set(range(g.n)):
        raise ImproperInput("vertex colouring is not total")
    for u, v in g.edges:
        if vc[u] == vc[v]:
            raise ImproperInput(f"vertex colouring clashes on edge ({u}, {v})")
    return {emap.backward[x]: c for x, c in vc.items()}
