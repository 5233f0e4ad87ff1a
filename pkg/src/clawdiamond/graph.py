"""Simple undirected graphs on dense integer vertices, plus the structural
queries every decider leans on (components, bridges, bipartiteness, induced
odd cycles, BFS levels around a cycle)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CycleNotInGraph, DuplicateEdge, SelfLoop, VertexOutOfRange

Edge = tuple[int, int]


def norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; vertices are ``0..n-1``.

    ``adj[v]`` is the ascending tuple of neighbours of ``v``.
    """

    n: int
    adj: tuple[tuple[int, ...], ...] = field(repr=False)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: k for k, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @cached_property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjsets[u]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return build_graph(n, edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return _trusted(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices`` (relabelled in ascending order).

        Returns the subgraph and the list mapping new labels to old ones.
        """
        old = sorted(set(vertices))
        new = {v: k for k, v in enumerate(old)}
        edges = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return _trusted(len(old), edges), old

    def edge_subgraph(self, edges: Iterable[Edge]) -> tuple["Graph", list[int]]:
        """Subgraph formed by ``edges`` and their endpoints, relabelled."""
        edges = sorted(norm(*e) for e in edges)
        old = sorted({x for e in edges for x in e})
        new = {v: k for k, v in enumerate(old)}
        return _trusted(len(old), [(new[u], new[v]) for u, v in edges]), old


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and return the canonical :class:`Graph`."""
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        if v in nbrs[u]:
            raise DuplicateEdge(f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def _trusted(n: int, edges: Iterable[Edge]) -> Graph:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in nbrs))


def cycle_graph(p: int) -> Graph:
    return build_graph(p, [(i, (i + 1) % p) for i in range(p)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# ----------------------------------------------------------------------
# connectivity
# ----------------------------------------------------------------------


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bridges(g: Graph) -> list[Edge]:
    """All cut-edges, sorted."""
    disc = [-1] * g.n
    low = [0] * g.n
    found: list[Edge] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(g.adj[w])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[u])
                if low[u] > disc[parent]:
                    found.append(norm(parent, u))
    return sorted(found)


def bipartition(g: Graph) -> Optional[list[int]]:
    """A 0/1 side assignment, or ``None`` when ``g`` has an odd cycle."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def find_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    for u, v in g.edges:
        common = g.adjsets[u] & g.adjsets[v]
        if common:
            return tuple(sorted((u, v, min(common))))  # type: ignore[return-value]
    return None


@dataclass(frozen=True)
class RootClassReport:
    subcubic: bool
    triangle_free: bool
    connected: bool
    high_degree_vertex: Optional[int] = None
    triangle: Optional[tuple[int, int, int]] = None
    disconnected_pair: Optional[tuple[int, int]] = None

    @property
    def ok(self) -> bool:
        return self.subcubic and self.triangle_free and self.connected


def validate_root_class(h: Graph) -> RootClassReport:
    """Check the three properties every root graph must have."""
    hi = next((v for v in range(h.n) if h.degree(v) > 3), None)
    tri = find_triangle(h)
    comps = components(h)
    pair = (comps[0][0], comps[1][0]) if len(comps) > 1 else None
    return RootClassReport(
        subcubic=hi is None,
        triangle_free=tri is None,
        connected=pair is None,
        high_degree_vertex=hi,
        triangle=tri,
        disconnected_pair=pair,
    )


# ----------------------------------------------------------------------
# odd cycles
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class OddCycle:
    vertices: tuple[int, ...]
    induced: bool = True

    @property
    def p(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i: int) -> int:
        return self.vertices[i % len(self.vertices)]

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [norm(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def is_cycle_in(g: Graph, cycle: Sequence[int]) -> bool:
    p = len(cycle)
    if p < 3 or len(set(cycle)) != p:
        return False
    if any(not (0 <= v < g.n) for v in cycle):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % p]) for i in range(p))


def is_chordless(g: Graph, cycle: Sequence[int]) -> bool:
    p = len(cycle)
    for a in range(p):
        for b in range(a + 2, p):
            if a == 0 and b == p - 1:
                continue
            if g.has_edge(cycle[a], cycle[b]):
                return False
    return True


def shortest_odd_cycle_length(g: Graph) -> Optional[int]:
    """Length of a shortest odd cycle (parity BFS from every vertex)."""
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    queue.append(w)
                elif dist[w] == dist[u]:
                    length = 2 * dist[u] + 1
                    if best is None or length < best:
                        best = length
    return best


def _induced_cycle_of_length(g: Graph, length: int) -> Optional[tuple[int, ...]]:
    """Lexicographically least chordless cycle of exactly ``length`` vertices,
    written from its minimum vertex."""
    for s in range(g.n):
        if g.degree(s) < 2:
            continue
        # distances back to s inside the subgraph of vertices >= s
        dist = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w > s and w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        path = [s]
        on_path = {s}
        # blocked[v] counts path vertices (other than the tail) adjacent to v
        found = _extend(g, s, length, dist, path, on_path)
        if found is not None:
            return found
    return None


def _extend(g, s, length, dist, path, on_path):
    tail = path[-1]
    k = len(path)
    for w in g.adj[tail]:
        if w <= s or w in on_path:
            continue
        if dist.get(w, length) + k > length:
            continue
        # w may touch only the tail, plus s when it closes the cycle
        bad = False
        for x in g.adj[w]:
            if x == tail or x not in on_path:
                continue
            if x == s and k + 1 == length and k >= 2:
                continue
            bad = True
            break
        if bad:
            continue
        if k + 1 == length:
            if g.has_edge(w, s):
                return tuple(path + [w])
            continue
        if k >= 2 and g.has_edge(w, s):
            continue
        path.append(w)
        on_path.add(w)
        res = _extend(g, s, length, dist, path, on_path)
        path.pop()
        on_path.discard(w)
        if res is not None:
            return res
    return None


def shortest_induced_odd_cycle(
    h: Graph, allow_triangle: bool = False, max_n: int = 64
) -> Optional[OddCycle]:
    """Shortest chordless odd cycle, ties broken lexicographically.

    With ``allow_triangle`` false only cycles of length >= 5 count (odd
    holes).  Returns ``None`` for bipartite graphs.  ``max_n`` bounds the
    exhaustive search used when triangles must be skipped.
    """
    if is_bipartite(h):
        return None
    shortest = shortest_odd_cycle_length(h)
    assert shortest is not None
    if allow_triangle or shortest >= 5:
        # a shortest odd cycle is always chordless
        cyc = _induced_cycle_of_length(h, shortest)
        assert cyc is not None
        return OddCycle(cyc, induced=True)
    if h.n > max_n:
        raise ValueError(f"graph has {h.n} vertices; exhaustive hole search capped at {max_n}")
    for length in range(5, h.n + 1, 2):
        cyc = _induced_cycle_of_length(h, length)
        if cyc is not None:
            return OddCycle(cyc, induced=True)
    return None


def neighborhood_levels(h: Graph, q: OddCycle | Sequence[int]) -> list[list[int]]:
    """BFS levels from the vertex set of ``q``: ``levels[0]`` is ``q`` itself."""
    verts = list(q.vertices if isinstance(q, OddCycle) else q)
    if not is_cycle_in(h, verts):
        raise CycleNotInGraph(f"{verts} is not a cycle of the graph")
    dist = {v: 0 for v in verts}
    levels = [sorted(verts)]
    frontier = sorted(verts)
    while frontier:
        nxt = set()
        for u in frontier:
            for w in h.adj[u]:
                if w not in dist:
                    dist[w] = len(levels)
                    nxt.add(w)
        if nxt:
            levels.append(sorted(nxt))
        frontier = sorted(nxt)
    return levels


def hamiltonian_cycles(g: Graph, limit: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Hamiltonian cycles as vertex sequences starting at 0, each undirected
    cycle once (``seq[1] < seq[-1]``).  Plain DFS; meant for small graphs."""
    n = g.n
    if n < 3 or g.min_degree < 2 or not is_connected(g):
        return
    path = [0]
    on = [False] * n
    on[0] = True
    count = 0
    stack = [iter(g.adj[0])]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            on[path.pop()] = False
            continue
        if on[nxt]:
            continue
        path.append(nxt)
        on[nxt] = True
        if len(path) == n:
            if g.has_edge(nxt, 0) and path[1] < path[-1]:
                yield tuple(path)
                count += 1
                if limit is not None and count >= limit:
                    return
            on[path.pop()] = False
            continue
        stack.append(iter(g.adj[nxt]))
