"""Builders shared by the test modules: random graphs, planted engine
instances, gadget necklaces and synthetic hole-plus-pairs graphs."""

from __future__ import annotations

import random
from itertools import combinations, product

import networkx as nx

from clawdiamond.graph import Graph, build_graph, cycle_graph

# ----------------------------------------------------------------------
# plain random graphs
# ----------------------------------------------------------------------


def random_subcubic_triangle_free(rng: random.Random, n: int, tries: int | None = None) -> Graph:
    """Add random edges while the graph stays subcubic and triangle-free."""
    adj = [set() for _ in range(n)]
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    for a, b in pairs[: tries or len(pairs)]:
        if len(adj[a]) < 3 and len(adj[b]) < 3 and not (adj[a] & adj[b]):
            adj[a].add(b)
            adj[b].add(a)
    return build_graph(n, [(a, b) for a in range(n) for b in adj[a] if a < b])


def permuted(g: Graph, rng: random.Random) -> tuple[Graph, list[int]]:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm), perm


def to_nx(g: Graph) -> nx.Graph:
    x = nx.Graph()
    x.add_nodes_from(range(g.n))
    x.add_edges_from(g.edges)
    return x


# ----------------------------------------------------------------------
# exhaustive references
# ----------------------------------------------------------------------


def brute_edge_colourable(h: Graph, k: int) -> bool:
    """Try every assignment of ``k`` colours to the edges."""
    edges = list(h.edges)
    for col in product(range(k), repeat=len(edges)):
        seen = set()
        ok = True
        for (a, b), c in zip(edges, col):
            if (a, c) in seen or (b, c) in seen:
                ok = False
                break
            seen.add((a, c))
            seen.add((b, c))
        if ok:
            return True
    return False


def brute_chromatic_index(h: Graph) -> int:
    if h.m == 0:
        return 0
    k = h.max_degree
    while not brute_edge_colourable(h, k):
        k += 1
    return k


def brute_matching_number(h: Graph) -> int:
    edges = list(h.edges)
    for size in range(min(len(edges), h.n // 2), 0, -1):
        for pick in combinations(edges, size):
            ends = [v for e in pick for v in e]
            if len(ends) == len(set(ends)):
                return size
    return 0


# ----------------------------------------------------------------------
# planted engine instances
# ----------------------------------------------------------------------


def _random_chords(rng: random.Random, n_cycle: int, free: list[int], density: float) -> list[tuple[int, int]]:
    """A random matching of chords among ``free`` cycle positions, each chord
    spanning cyclic distance at least 2."""
    pool = list(free)
    rng.shuffle(pool)
    chords = []
    used = set()
    for a in pool:
        if a in used or rng.random() > density:
            continue
        options = [b for b in pool if b not in used and b != a and min((a - b) % n_cycle, (b - a) % n_cycle) >= 2]
        if options:
            b = rng.choice(options)
            used |= {a, b}
            chords.append((a, b))
    return chords


def planted_hamiltonian(rng: random.Random, n_cycle: int, case: int):
    """Odd cycle ``0..n_cycle-1`` with random chords and a planted witness.
    Returns (graph, cycle, case, witness)."""
    N = n_cycle
    if case == 3:
        i = rng.randrange(N)
        reserved = {(i - 1) % N, (i + 1) % N}
        free = [x for x in range(N) if x not in reserved]
        chords = _random_chords(rng, N, free, rng.random())
        witness = (i,)
    else:
        step = -1 if case == 1 else 1
        while True:
            i, j = rng.sample(range(N), 2)
            if min((i - j) % N, (j - i) % N) < 2:
                continue
            reserved = {(i + step) % N, (j + step) % N}
            if reserved & {i, j}:
                continue
            break
        free = [x for x in range(N) if x not in reserved | {i, j}]
        chords = [(i, j)] + _random_chords(rng, N, free, rng.random())
        witness = (i, j)
    h = build_graph(N, list(cycle_graph(N).edges) + chords)
    return h, tuple(range(N)), case, witness


def planted_near_hamiltonian(rng: random.Random, n_cycle: int, case: int):
    """Even cycle ``0..n_cycle-1`` plus vertex ``n_cycle`` joined to two
    non-consecutive cycle vertices, random chords and a planted witness.
    Returns (graph, v, cycle, case, witness)."""
    N = n_cycle
    v = N
    while True:
        i, j = rng.sample(range(N), 2)
        if min((i - j) % N, (j - i) % N) >= 2:
            break
    taken = {i, j}
    extra: list[tuple[int, int]] = []
    if case == 1:
        k = rng.choice([(i - 1) % N, (i + 1) % N, (j - 1) % N, (j + 1) % N])
        reserved = {k}
        witness = (i, k)
    else:
        a = (i + 1) % N if case == 3 else (i - 1) % N
        sign = 1 if case == 3 else -1
        for _ in range(100):
            ell = rng.randrange(N)
            if ell in taken or a in taken or min((ell - a) % N, (a - ell) % N) < 2:
                continue
            # orientation as seen after the engine mirrors case 2 onto case 3
            before, after = (ell - sign) % N, (ell + sign) % N
            ii, ll = (i, ell) if case == 3 else (N - 1 - i, N - 1 - ell)
            choices = []
            if before not in taken | {a}:
                choices.append(before)
            if after not in taken | {a} and (ll - ii) % 2 == 0:
                choices.append(after)
            if choices:
                low = rng.choice(choices)
                reserved = {low}
                extra = [(a, ell)]
                taken |= {a, ell}
                witness = (i, ell)
                break
        else:
            return planted_near_hamiltonian(rng, n_cycle, 1)
    free = [x for x in range(N) if x not in taken | reserved]
    chords = _random_chords(rng, N, free, rng.random())
    edges = list(cycle_graph(N).edges) + [(i, v), (j, v)] + extra + chords
    return build_graph(N + 1, edges), v, tuple(range(N)), case, witness


# ----------------------------------------------------------------------
# gadget necklaces
# ----------------------------------------------------------------------

# Each gadget: (length of cycle stretch, attachments of its outside vertices
# as stretch offsets, edges among its outside vertices).
GADGETS = {
    "a": (4, [(0, 2), (1, 3)], [(0, 1)]),
    "b": (3, [(0, 2), (1,)], []),
    "c": (4, [(0,), (1, 3)], [(0, 1)]),
    "d": (3, [(0, 2), (1,)], [(0, 1)]),
}


def necklace(kinds: list[str], gaps: list[int]) -> tuple[Graph, tuple[int, ...]]:
    """Cycle carrying the named gadgets in order, with ``gaps[t]`` bare cycle
    vertices after gadget ``t``.  Returns the graph and the cycle."""
    p = sum(GADGETS[k][0] for k in kinds) + sum(gaps)
    edges = list(cycle_graph(p).edges)
    nxt = p
    pos = 0
    for kind, gap in zip(kinds, gaps):
        length, atts, inner = GADGETS[kind]
        base = nxt
        for t, at in enumerate(atts):
            for off in at:
                edges.append(((pos + off) % p, base + t))
        edges += [(base + a, base + b) for a, b in inner]
        nxt += len(atts)
        pos += length + gap
    return build_graph(nxt, edges), tuple(range(p))


# ----------------------------------------------------------------------
# hole plus matched pairs (vertex side)
# ----------------------------------------------------------------------


def hole_with_pairs(rng: random.Random, p: int, density: float = 0.5) -> Graph:
    """Odd hole ``v_0..v_{p-1}`` where vertex ``w_i`` sees ``v_i, v_{i+1}``.
    Some ``w_i`` are present; some present pairs ``w_i w_{i+2}`` are joined by
    an edge (an induced matching).  The result is claw- and diamond-free."""
    present = [i for i in range(p) if rng.random() < density]
    label = {i: p + t for t, i in enumerate(present)}
    edges = list(cycle_graph(p).edges)
    for i in present:
        edges += [(label[i], i), (label[i], (i + 1) % p)]
    used = set()
    order = list(present)
    rng.shuffle(order)
    for i in order:
        j = (i + 2) % p
        if j in label and i not in used and j not in used and rng.random() < 0.7:
            # keep the matching induced: no neighbouring pair already matched
            if any(x in used for x in ((i - 2) % p, (j + 2) % p)):
                continue
            used |= {i, j}
            edges.append((label[i], label[j]))
    return build_graph(p + len(present), edges)


def n122_free_hole_instance(rng: random.Random, p_range=(31, 45)) -> Graph:
    """Rejection-sample :func:`hole_with_pairs` until no induced N_{1,2,2}
    remains.  Sparse attachments keep the acceptance rate high."""
    from clawdiamond.patterns import build_net, find_induced

    net = build_net(1, 2, 2)
    while True:
        p = rng.randrange(p_range[0], p_range[1] + 1, 2)
        g = hole_with_pairs(rng, p, rng.uniform(0.15, 0.45))
        if find_induced(net, g) is None:
            return g
