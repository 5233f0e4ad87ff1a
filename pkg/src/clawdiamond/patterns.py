"""Small pattern graphs and containment search.

Two notions of containment are needed: induced embeddings (forbidden
subgraphs of the vertex-colouring side) and plain subgraph embeddings
(spiders inside the root graph).  Both use the same backtracking search,
ordered so the first embedding found is the lexicographically least image
sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BadParameters, PatternTooLarge
from .graph import Graph, build_graph, complete_graph, cycle_graph

MAX_PATTERN = 12


@dataclass(frozen=True)
class PatternMatch:
    """``mapping[k]`` is the host vertex playing pattern vertex ``k``."""

    mapping: tuple[int, ...]
    induced: bool

    def image(self) -> list[int]:
        return sorted(self.mapping)


def verify_match(pattern: Graph, host: Graph, match: PatternMatch) -> bool:
    mp = match.mapping
    if len(mp) != pattern.n or len(set(mp)) != pattern.n:
        return False
    if any(not (0 <= x < host.n) for x in mp):
        return False
    for a in range(pattern.n):
        for b in range(a + 1, pattern.n):
            e_p = pattern.has_edge(a, b)
            e_h = host.has_edge(mp[a], mp[b])
            if e_p and not e_h:
                return False
            if match.induced and e_h and not e_p:
                return False
    return True


# ----------------------------------------------------------------------
# named patterns
# ----------------------------------------------------------------------


def build_net(i: int, j: int, k: int) -> Graph:
    """Triangle 0,1,2 with pendant paths of lengths i, j, k at 0, 1, 2."""
    if not (1 <= i <= j <= k):
        raise BadParameters(f"need 1 <= i <= j <= k, got {(i, j, k)}")
    edges = [(0, 1), (1, 2), (0, 2)]
    nxt = 3
    for root, length in ((0, i), (1, j), (2, k)):
        prev = root
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def build_spider(i: int, j: int, k: int) -> Graph:
    """Centre 0 with legs of lengths i, j, k (vertices numbered leg by leg)."""
    if not (1 <= i <= j <= k):
        raise BadParameters(f"need 1 <= i <= j <= k, got {(i, j, k)}")
    edges = []
    nxt = 1
    for length in (i, j, k):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


CLAW = build_spider(1, 1, 1)
DIAMOND = build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
K4 = complete_graph(4)
C5 = cycle_graph(5)


def parse_pattern(spec: str) -> tuple[Graph, bool]:
    """Parse ``claw``, ``diamond``, ``k4``, ``c5``/``cN``, ``net:i,j,k`` or
    ``spider:i,j,k``.  The flag says whether the match should be induced."""
    s = spec.strip().lower()
    if s == "claw":
        return CLAW, True
    if s == "diamond":
        return DIAMOND, True
    if s == "k4":
        return K4, True
    if s.startswith("c") and s[1:].isdigit():
        return cycle_graph(int(s[1:])), True
    kind, _, args = s.partition(":")
    try:
        ijk = sorted(int(x) for x in args.split(","))
    except ValueError:
        raise BadParameters(f"bad pattern {spec!r}") from None
    if len(ijk) != 3:
        raise BadParameters(f"bad pattern {spec!r}")
    if kind == "net":
        return build_net(*ijk), True
    if kind == "spider":
        return build_spider(*ijk), False
    raise BadParameters(f"unknown pattern {spec!r}")


# ----------------------------------------------------------------------
# search
# ----------------------------------------------------------------------


def find_embedding(
    pattern: Graph, host: Graph, induced: bool, max_pattern: int = MAX_PATTERN
) -> Optional[PatternMatch]:
    """First embedding of ``pattern`` in ``host`` in lexicographic order of the
    image sequence ``mapping[0], mapping[1], ...``."""
    if pattern.n > max_pattern:
        raise PatternTooLarge(f"pattern has {pattern.n} vertices (limit {max_pattern})")
    if pattern.n == 0:
        return PatternMatch((), induced)
    if pattern.n > host.n:
        return None
    # Pattern vertices are placed in index order so the first hit is the
    # lexicographically least image; an earlier neighbour narrows the pool.
    anchor = {}
    for u in range(pattern.n):
        earlier = [w for w in pattern.adj[u] if w < u]
        anchor[u] = min(earlier) if earlier else None
    mapping = [-1] * pattern.n
    used = set()
    pdeg = [pattern.degree(u) for u in range(pattern.n)]

    def candidates(u):
        a = anchor[u]
        pool = host.adj[mapping[a]] if a is not None else range(host.n)
        for x in pool:
            if x in used or host.degree(x) < pdeg[u]:
                continue
            ok = True
            for w in range(u):
                e_p = pattern.has_edge(u, w)
                e_h = x in host.adjsets[mapping[w]]
                if (e_p and not e_h) or (induced and e_h and not e_p):
                    ok = False
                    break
            if ok:
                yield x

    def rec(u):
        if u == pattern.n:
            return True
        for x in candidates(u):
            mapping[u] = x
            used.add(x)
            if rec(u + 1):
                return True
            used.discard(x)
        mapping[u] = -1
        return False

    if rec(0):
        return PatternMatch(tuple(mapping), induced)
    return None


def find_induced(pattern: Graph, host: Graph, max_pattern: int = MAX_PATTERN) -> Optional[PatternMatch]:
    return find_embedding(pattern, host, induced=True, max_pattern=max_pattern)


def find_subgraph(pattern: Graph, host: Graph, max_pattern: int = MAX_PATTERN) -> Optional[PatternMatch]:
    return find_embedding(pattern, host, induced=False, max_pattern=max_pattern)


def find_spider_subgraph(host: Graph, i: int, j: int, k: int) -> Optional[PatternMatch]:
    """Not-necessarily-induced copy of the spider with legs i, j, k."""
    i, j, k = sorted((i, j, k))
    spider = build_spider(i, j, k)
    # Legs are laid out consecutively, so every vertex's earlier neighbour is
    # its predecessor on the leg (or the centre): the search walks paths.
    return find_embedding(spider, host, induced=False, max_pattern=max(MAX_PATTERN, spider.n))


def find_claw(g: Graph) -> Optional[PatternMatch]:
    return find_induced(CLAW, g)


def find_diamond(g: Graph) -> Optional[PatternMatch]:
    return find_induced(DIAMOND, g)


def find_k4(g: Graph) -> Optional[PatternMatch]:
    return find_induced(K4, g)


def find_induced_c5(g: Graph) -> Optional[PatternMatch]:
    return find_induced(C5, g)
