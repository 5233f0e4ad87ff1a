"""Edge colouring: matchings, the overfull test, bipartite colouring, two
constructive engines for (near-)Hamiltonian subcubic graphs, and an exact
backtracking search.

Colourings are plain ``dict[Edge, int]`` with colours ``1..c``.  The engines
use red = 1, green = 2, blue = 3.

Cycle positions passed to the engines are 0-based indices into the cycle's
vertex sequence and are read cyclically.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import NotBipartite, PreconditionViolated, TooLarge
from .graph import Edge, Graph, bipartition, is_connected, norm

RED, GREEN, BLUE = 1, 2, 3
MAX_EDGES = 64

EdgeColoring = dict


def is_proper_edge_coloring(h: Graph, ec: dict[Edge, int], max_colors: Optional[int] = None) -> bool:
    """Total on ``h.edges``, colours in ``1..max_colors`` and no clash at any vertex."""
    if set(ec) != set(h.edges):
        return False
    if any(not isinstance(c, int) or c < 1 or (max_colors is not None and c > max_colors) for c in ec.values()):
        return False
    for v in range(h.n):
        seen = [ec[norm(v, w)] for w in h.adj[v]]
        if len(seen) != len(set(seen)):
            return False
    return True


def colors_used(ec: dict[Edge, int]) -> int:
    return len(set(ec.values()))


# ----------------------------------------------------------------------
# matchings
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class MatchingInfo:
    size: int
    witness: tuple[Edge, ...]


def matching_number(h: Graph) -> MatchingInfo:
    """Maximum matching by augmenting paths with blossom contraction."""
    n = h.n
    adj = h.adj
    match = [-1] * n
    for u, v in h.edges:  # greedy start
        if match[u] == -1 and match[v] == -1:
            match[u], match[v] = v, u

    def find_path(root):
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a, b):
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v, b, child, blossom):
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = find_path(root)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    witness = tuple(sorted((v, match[v]) for v in range(n) if match[v] > v))
    return MatchingInfo(len(witness), witness)


def is_overfull(h: Graph) -> bool:
    """More edges than ``matching number * max degree``."""
    return h.m > matching_number(h).size * h.max_degree


# ----------------------------------------------------------------------
# bipartite graphs
# ----------------------------------------------------------------------


def color_bipartite(h: Graph) -> dict[Edge, int]:
    """Proper colouring with ``max_degree`` colours by alternating-path swaps."""
    if bipartition(h) is None:
        raise NotBipartite("graph has an odd cycle")
    k = h.max_degree
    at: list[dict[int, int]] = [{} for _ in range(h.n)]  # vertex -> colour -> other end
    col: dict[Edge, int] = {}

    def free(v):
        return next(c for c in range(1, k + 1) if c not in at[v])

    for u, v in h.edges:
        a, b = free(u), free(v)
        if a not in at[v]:
            c = a
        else:
            # swap a/b on the a-b path leaving v; it cannot reach u
            path = [v]
            x, want = v, a
            while want in at[x]:
                y = at[x][want]
                path.append(y)
                x, want = y, (b if want == a else a)
            for p, q in zip(path, path[1:]):
                e = norm(p, q)
                old = col[e]
                new = b if old == a else a
                col[e] = new
            for p in path:
                at[p] = {}
            for p in path:
                for w in h.adj[p]:
                    e = norm(p, w)
                    if e in col:
                        at[p][col[e]] = w
            c = a
        col[(u, v)] = c
        at[u][c] = v
        at[v][c] = u
    return col


# ----------------------------------------------------------------------
# engines for Hamiltonian odd cycles
# ----------------------------------------------------------------------


def _cycle_seq(cycle) -> list[int]:
    return list(cycle.vertices) if hasattr(cycle, "vertices") else list(cycle)


def _check_spanning_cycle(h: Graph, seq: list[int], parity: int) -> None:
    if len(seq) < 3 or len(set(seq)) != len(seq) or len(seq) % 2 != parity:
        raise PreconditionViolated("cycle has wrong length or repeats a vertex")
    for a, b in zip(seq, seq[1:] + seq[:1]):
        if not h.has_edge(a, b):
            raise PreconditionViolated(f"({a}, {b}) is not an edge")
    if h.max_degree > 3:
        raise PreconditionViolated("graph is not subcubic")
    if not is_connected(h):
        raise PreconditionViolated("graph is not connected")


def _kempe_walk(col, h, start_vertex, first_edge, colours, forbid):
    """Follow the path alternating between ``colours`` from ``start_vertex``
    through ``first_edge``; never step onto ``forbid``.  Returns the vertex
    list and edge list of the walk."""
    a, b = colours
    verts = [start_vertex]
    edges = [first_edge]
    x = first_edge[0] if first_edge[1] == start_vertex else first_edge[1]
    verts.append(x)
    want = b if col[first_edge] == a else a
    while True:
        nxt = None
        for w in h.adj[x]:
            e = norm(x, w)
            if e != edges[-1] and col[e] == want:
                nxt = (w, e)
                break
        if nxt is None or nxt[0] == forbid:
            return verts, edges
        x = nxt[0]
        verts.append(x)
        edges.append(nxt[1])
        want = b if want == a else a
        if len(edges) > h.m:
            raise AssertionError("alternating walk did not terminate")


def color_hamiltonian_odd(h: Graph, cycle, case: int, witness) -> dict[Edge, int]:
    """3-edge-colour a subcubic graph with a spanning odd cycle.

    ``case`` 1: ``witness = (i, j)`` with ``v_i v_j`` a chord and
    ``v_{i-1}``, ``v_{j-1}`` of degree 2.  Case 2: same with ``v_{i+1}`` and
    ``v_{j+1}``.  Case 3: ``witness = (i,)`` (or ``i``) with ``v_{i-1}`` and
    ``v_{i+1}`` of degree 2.
    """
    seq = _cycle_seq(cycle)
    _check_spanning_cycle(h, seq, 1)
    if len(seq) != h.n:
        raise PreconditionViolated("cycle is not Hamiltonian")
    N = len(seq)
    deg = lambda pos: h.degree(seq[pos % N])  # noqa: E731
    if case in (1, 2):
        i, j = witness
        i, j = i % N, j % N
        if (j - i) % N in (0, 1, N - 1) or not h.has_edge(seq[i], seq[j]):
            raise PreconditionViolated(f"positions {i}, {j} do not carry a chord")
        step = -1 if case == 1 else 1
        if deg(i + step) != 2 or deg(j + step) != 2:
            raise PreconditionViolated(f"case {case} needs degree 2 next to both chord ends")
        if case == 2:
            # reverse the cycle so the degree-2 neighbours come before
            seq = seq[::-1]
            i, j = N - 1 - i, N - 1 - j
        # walk forward an even number of steps from v_i to v_j
        if (j - i) % N % 2:
            i, j = j, i
        return _ham_engine(h, seq, i, chord_end=j)
    if case == 3:
        i = witness[0] if isinstance(witness, (tuple, list)) else witness
        i %= N
        if deg(i - 1) != 2 or deg(i + 1) != 2:
            raise PreconditionViolated("case 3 needs degree 2 on both cycle neighbours")
        return _ham_engine(h, seq, i, chord_end=None)
    raise PreconditionViolated(f"unknown case {case}")


def _ham_engine(h, seq, i, chord_end):
    N = len(seq)
    cyc = {norm(seq[k], seq[(k + 1) % N]): k for k in range(N)}
    col: dict[Edge, int] = {}
    for e in h.edges:
        if e not in cyc:
            col[e] = RED
    col[norm(seq[i - 1], seq[i])] = RED
    for off in range(N - 1):
        k = (i + off) % N
        col[norm(seq[k], seq[(k + 1) % N])] = GREEN if off % 2 == 0 else BLUE
    vi = seq[i]
    chord = next((norm(vi, w) for w in h.adj[vi] if norm(vi, w) not in cyc), None)
    if chord is None:
        return col
    prev = seq[i - 1]
    verts, edges = _kempe_walk(col, h, vi, chord, (RED, BLUE), forbid=vi)
    for e in edges:
        col[e] = BLUE if col[e] == RED else RED
    end = verts[-1]
    if chord_end is not None:
        # parity forces the walk to stop one step before the chord end
        expect = seq[(chord_end - 1) % N]
        if end != expect:
            raise AssertionError(f"Kempe path ended at {end}, expected {expect}")
    elif end == prev:
        col[norm(prev, vi)] = GREEN
        col[norm(vi, seq[(i + 1) % N])] = RED
    return col


# ----------------------------------------------------------------------
# engine for near-Hamiltonian graphs
# ----------------------------------------------------------------------


def color_near_hamiltonian(h: Graph, v: int, cycle, case: int, witness) -> dict[Edge, int]:
    """3-edge-colour ``h`` where ``v`` has degree 2 and ``h - v`` has the even
    Hamiltonian cycle ``cycle``.

    Let ``v_i`` be the neighbour of ``v`` named by ``witness`` and ``v_j`` the
    other one.

    * case 1: ``witness = (i, k)`` where ``k`` is one of ``i-1, i+1, j-1,
      j+1`` and ``v_k`` has degree 2;
    * case 2: ``witness = (i, l)`` with chord ``v_{i-1} v_l`` and either
      ``v_{l+1}`` of degree 2, or ``v_{l-1}`` of degree 2 and ``l - i`` even;
    * case 3: mirror image of case 2 with ``v_{i+1}``.
    """
    seq = _cycle_seq(cycle)
    if v in seq or h.degree(v) != 2:
        raise PreconditionViolated("v must be a degree-2 vertex off the cycle")
    _check_spanning_cycle(h.induced([x for x in range(h.n) if x != v])[0], [x - (x > v) for x in seq], 0)
    if len(seq) != h.n - 1 or h.max_degree > 3 or not is_connected(h):
        raise PreconditionViolated("cycle must cover every vertex except v")
    N = len(seq)
    pos = {x: k for k, x in enumerate(seq)}
    ends = sorted(pos[w] for w in h.adj[v])
    i, k = witness
    i %= N
    if i not in ends:
        raise PreconditionViolated(f"position {i} is not a neighbour of v")
    j = ends[1] if ends[0] == i else ends[0]
    if (j - i) % N in (1, N - 1):
        raise PreconditionViolated("neighbours of v are consecutive on the cycle")
    deg = lambda p: h.degree(seq[p % N])  # noqa: E731
    k %= N

    if case == 1:
        if deg(k) != 2 or k not in {(i - 1) % N, (i + 1) % N, (j - 1) % N, (j + 1) % N}:
            raise PreconditionViolated("case 1 needs a degree-2 cycle neighbour of v_i or v_j")
        if k in ((j - 1) % N, (j + 1) % N) and k not in ((i - 1) % N, (i + 1) % N):
            i, j = j, i
        if k == (i - 1) % N:
            seq, i, j = _reverse(seq, i, j)
        return _near_case1(h, v, seq, i, j)

    if case not in (2, 3):
        raise PreconditionViolated(f"unknown case {case}")
    if case == 2:
        seq, i, j = _reverse(seq, i, j)
        k = N - 1 - k
    # now the chord leaves v_{i+1}
    a = (i + 1) % N
    if not h.has_edge(seq[a], seq[k]) or (k - a) % N in (0, 1, N - 1):
        raise PreconditionViolated("witness chord is missing")
    if deg(k - 1) == 2 and seq[(k - 1) % N] != seq[a]:
        return _near_chord(h, v, seq, i, j, k, first=True)
    if deg(k + 1) == 2 and (k - i) % 2 == 0:
        return _near_chord(h, v, seq, i, j, k, first=False)
    raise PreconditionViolated("chord end has no suitable degree-2 neighbour")


def _reverse(seq, i, j):
    N = len(seq)
    return seq[::-1], N - 1 - i, N - 1 - j


def _near_case1(h, v, seq, i, j):
    N = len(seq)
    cyc = {norm(seq[k], seq[(k + 1) % N]) for k in range(N)}
    col = {e: RED for e in h.edges if e not in cyc}
    col[norm(seq[i], seq[(i + 1) % N])] = RED
    for off in range(1, N):
        k = (i + off) % N
        col[norm(seq[k], seq[(k + 1) % N])] = GREEN if off % 2 else BLUE
    col[norm(v, seq[j])] = RED
    col[norm(v, seq[i])] = BLUE
    return col


def _near_chord(h, v, seq, i, j, l, first):
    """Chord ``v_{i+1} v_l``.  ``first``: ``v_{l-1}`` has degree 2; otherwise
    ``v_{l+1}`` has degree 2 and ``l - i`` is even."""
    N = len(seq)
    a = (i + 1) % N
    cyc = {norm(seq[k], seq[(k + 1) % N]) for k in range(N)}
    col = {e: RED for e in h.edges if e not in cyc}
    col[norm(seq[a], seq[l])] = BLUE
    col[norm(seq[i], seq[a])] = RED
    if first:
        red_pos = (l - 1) % N
        arcs = [(a, red_pos), (l, i)]  # cycle positions walked forward
    else:
        red_pos = l
        arcs = [(a, l), ((l + 1) % N, i)]
    col[norm(seq[red_pos], seq[(red_pos + 1) % N])] = RED
    for start, stop in arcs:
        off, k = 0, start
        while k != stop:
            col[norm(seq[k], seq[(k + 1) % N])] = GREEN if off % 2 == 0 else BLUE
            k = (k + 1) % N
            off += 1
    col[norm(v, seq[j])] = RED
    last = col[norm(seq[(i - 1) % N], seq[i])]
    col[norm(v, seq[i])] = BLUE if last == GREEN else GREEN
    return col


# ----------------------------------------------------------------------
# exact search
# ----------------------------------------------------------------------


def chromatic_index_backtracking(
    h: Graph,
    max_colors: int,
    fixed: Optional[dict[Edge, int]] = None,
    max_edges: int = MAX_EDGES,
) -> Optional[dict[Edge, int]]:
    """A proper colouring with at most ``max_colors`` colours, or None.

    Exhaustive.  The next edge is the one with the fewest colours left, ties
    broken by (larger endpoint degree first, edge index).  Without ``fixed``
    colours, a new colour may only be the next unused one.
    """
    if h.m > max_edges:
        raise TooLarge(f"{h.m} edges exceeds the limit of {max_edges}")
    fixed = dict(fixed or {})
    if h.m == 0:
        return {}
    if max_colors < h.max_degree:
        return None
    edges = h.edges
    m = len(edges)
    full = (1 << (max_colors + 1)) - 2  # bits 1..max_colors
    used = [0] * h.n
    col = [0] * m
    rank = sorted(range(m), key=lambda k: (-max(h.degree(edges[k][0]), h.degree(edges[k][1])), k))
    order_key = {k: r for r, k in enumerate(rank)}
    for e, c in fixed.items():
        k = h.edge_index[norm(*e)]
        u, v = edges[k]
        bit = 1 << c
        if c < 1 or c > max_colors or used[u] & bit or used[v] & bit:
            return None
        col[k] = c
        used[u] |= bit
        used[v] |= bit
    symmetric = not fixed
    left = [k for k in rank if col[k] == 0]

    def rec(top):
        if not left:
            return True
        best = None
        best_avail = 0
        best_cnt = 99
        for k in left:
            u, v = edges[k]
            avail = full & ~(used[u] | used[v])
            cnt = bin(avail).count("1")
            if cnt < best_cnt or (cnt == best_cnt and order_key[k] < order_key[best]):
                best, best_avail, best_cnt = k, avail, cnt
                if cnt == 0:
                    return False
        u, v = edges[best]
        left.remove(best)
        limit = min(max_colors, top + 1) if symmetric else max_colors
        for c in range(1, limit + 1):
            bit = 1 << c
            if not best_avail & bit:
                continue
            col[best] = c
            used[u] |= bit
            used[v] |= bit
            if rec(max(top, c)):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
            col[best] = 0
        left.append(best)
        return False

    if not rec(0 if symmetric else max_colors):
        return None
    return {edges[k]: col[k] for k in range(m)}


def chromatic_index(h: Graph, max_edges: int = MAX_EDGES) -> int:
    """Exact chromatic index: try ``max_degree`` colours, else it is one more."""
    if h.m == 0:
        return 0
    if chromatic_index_backtracking(h, h.max_degree, max_edges=max_edges) is not None:
        return h.max_degree
    return h.max_degree + 1


def color_path_or_cycle(h: Graph) -> dict[Edge, int]:
    """Colour a graph of maximum degree at most 2 with at most 3 colours
    (2 unless some component is an odd cycle)."""
    if h.max_degree > 2:
        raise PreconditionViolated("maximum degree exceeds 2")
    col: dict[Edge, int] = {}
    seen = [False] * h.n
    for s in range(h.n):
        if seen[s] or h.degree(s) == 0:
            continue
        comp = _component(h, s, seen)
        start = min((x for x in comp if h.degree(x) == 1), default=min(comp))
        walk = [start]
        prev, x = -1, start
        closed = False
        while True:
            nxt = [w for w in h.adj[x] if w != prev]
            if not nxt:
                break
            if nxt[0] == start:
                closed = True
                break
            walk.append(nxt[0])
            prev, x = x, nxt[0]
        if closed:
            walk.append(start)
        steps = list(zip(walk, walk[1:]))
        for idx, (a, b) in enumerate(steps):
            c = 1 + idx % 2
            if closed and len(steps) % 2 == 1 and idx == len(steps) - 1:
                c = 3
            col[norm(a, b)] = c
    return col


def _component(h, s, seen):
    comp = []
    stack = [s]
    seen[s] = True
    while stack:
        x = stack.pop()
        comp.append(x)
        for w in h.adj[x]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return comp
