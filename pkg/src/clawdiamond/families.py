"""Named non-3-edge-colourable root graphs and their line graphs.

* ``D6i1(i)``: ``i`` copies of K_{3,3} minus an edge chained port to port and
  closed through one subdivision vertex (6i+1 vertices, 9i+1 edges).
  ``D6i1(1)`` is K_{3,3} with one edge subdivided.
* ``D6i5(i)``: the same chain closed through a K_{2,3} connector whose two
  ports have opposite parity (6i+5 vertices, 9i+7 edges).
* ``PetersenMinusVertex``: the Petersen graph minus one vertex.
* ``OverfullC9Chords4``: a 9-cycle plus four chords, subcubic and
  triangle-free.  A set of graphs, recognised but not generated.
* ``B9i1``, ``B9i7``, ``LinePetersenMinusVertex``: line graphs of the above.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .canon import canonical_form
from .edgecolor import chromatic_index, matching_number
from .errors import BadParameters, NotGeneratable, OracleBudgetExceeded
from .graph import (
    Graph,
    bridges,
    build_graph,
    cycle_graph,
    find_triangle,
    hamiltonian_cycles,
    is_connected,
)
from .linegraph import line_graph

PARAMETERISED = ("D6i1", "D6i5", "B9i1", "B9i7")
FIXED = ("PetersenMinusVertex", "LinePetersenMinusVertex", "OverfullC9Chords4")
KINDS = PARAMETERISED + FIXED
LINE_OF = {"D6i1": "B9i1", "D6i5": "B9i7", "PetersenMinusVertex": "LinePetersenMinusVertex"}
ROOT_OF = {v: k for k, v in LINE_OF.items()}


@dataclass(frozen=True)
class FamilyId:
    kind: str
    parameter: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadParameters(f"unknown family {self.kind!r}")
        if (self.kind in PARAMETERISED) != (self.parameter is not None):
            raise BadParameters(f"{self.kind} {'needs' if self.kind in PARAMETERISED else 'takes no'} parameter")
        if self.parameter is not None and self.parameter < 1:
            raise BadParameters("family parameter must be >= 1")

    def __str__(self) -> str:
        return self.kind if self.parameter is None else f"{self.kind} i={self.parameter}"

    @classmethod
    def parse(cls, text: str) -> "FamilyId":
        parts = text.split()
        if len(parts) == 1:
            return cls(parts[0])
        if len(parts) == 2 and parts[1].startswith("i="):
            return cls(parts[0], int(parts[1][2:]))
        raise BadParameters(f"bad family id {text!r}")


def _chain(i: int) -> tuple[list[tuple[int, int]], int, int]:
    """Edges of ``i`` chained copies of K_{3,3} minus an edge; returns the
    edges and the two free ports."""
    edges = []
    for k in range(i):
        x, b2, a2, y, b3, a3 = range(6 * k, 6 * k + 6)
        side_a, side_b = (x, a2, a3), (y, b2, b3)
        edges += [(a, b) for a in side_a for b in side_b if (a, b) != (x, y)]
        if k + 1 < i:
            edges.append((y, 6 * (k + 1)))
    return edges, 0, 6 * (i - 1) + 3


def d6i1(i: int) -> Graph:
    edges, first, last = _chain(i)
    s = 6 * i
    return build_graph(6 * i + 1, edges + [(first, s), (last, s)])


def d6i5(i: int) -> Graph:
    edges, first, last = _chain(i)
    c0, c1, c2, c3, c4 = range(6 * i, 6 * i + 5)
    connector = [(c0, c1), (c1, c2), (c0, c3), (c2, c3), (c3, c4), (c4, c1)]
    return build_graph(6 * i + 5, edges + connector + [(last, c0), (c2, first)])


def petersen() -> Graph:
    outer = [(k, (k + 1) % 5) for k in range(5)]
    inner = [(k + 5, (k + 2) % 5 + 5) for k in range(5)]
    spokes = [(k, k + 5) for k in range(5)]
    return build_graph(10, outer + inner + spokes)


def petersen_minus_vertex() -> Graph:
    return petersen().induced(range(9))[0]


def gen_family(fid: FamilyId) -> Graph:
    if fid.kind == "D6i1":
        return d6i1(fid.parameter)
    if fid.kind == "D6i5":
        return d6i5(fid.parameter)
    if fid.kind == "PetersenMinusVertex":
        return petersen_minus_vertex()
    if fid.kind in ROOT_OF:
        root = gen_family(FamilyId(ROOT_OF[fid.kind], fid.parameter))
        return line_graph(root)[0]
    raise NotGeneratable(f"{fid.kind} is a set of graphs, not a single graph")


def line_family(fid: FamilyId) -> FamilyId:
    """The family naming the line graphs of ``fid``'s members."""
    if fid.kind == "OverfullC9Chords4":
        return fid
    return FamilyId(LINE_OF[fid.kind], fid.parameter)


# ----------------------------------------------------------------------
# 9-cycles with four chords
# ----------------------------------------------------------------------


@lru_cache(maxsize=1)
def overfull_c9_chords4_members() -> tuple[Graph, ...]:
    """All 9-cycles with four chords that stay subcubic and triangle-free, one
    per isomorphism class, in canonical-form order."""
    base = cycle_graph(9).edges
    chords = [(a, b) for a, b in combinations(range(9), 2) if min(b - a, 9 - (b - a)) >= 3]
    seen: dict[str, Graph] = {}
    for pick in combinations(chords, 4):
        ends = [v for e in pick for v in e]
        if len(set(ends)) != 8:
            continue
        g = build_graph(9, list(base) + list(pick))
        if find_triangle(g) is not None:
            continue
        seen.setdefault(canonical_form(g), g)
    return tuple(seen[k] for k in sorted(seen))


def is_overfull_c9_chords4(h: Graph) -> bool:
    if h.n != 9 or h.m != 13 or h.max_degree > 3 or find_triangle(h) is not None:
        return False
    if next(hamiltonian_cycles(h, limit=1), None) is None:
        return False
    return h.m > matching_number(h).size * h.max_degree


# ----------------------------------------------------------------------
# recognition
# ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _family_form(kind: str, parameter: Optional[int]) -> str:
    return canonical_form(gen_family(FamilyId(kind, parameter)))


def _recognize_root(h: Graph) -> Optional[FamilyId]:
    if not is_connected(h) or h.max_degree > 3:
        return None
    if h.n % 6 == 1 and h.m == 9 * (h.n // 6) + 1 and h.n >= 7:
        i = h.n // 6
        if canonical_form(h) == _family_form("D6i1", i):
            return FamilyId("D6i1", i)
    if h.n % 6 == 5 and h.n >= 11 and h.m == 9 * (h.n // 6) + 7:
        i = h.n // 6
        if canonical_form(h) == _family_form("D6i5", i):
            return FamilyId("D6i5", i)
    if h.n == 9 and h.m == 12 and canonical_form(h) == _family_form("PetersenMinusVertex", None):
        return FamilyId("PetersenMinusVertex")
    if is_overfull_c9_chords4(h):
        return FamilyId("OverfullC9Chords4")
    return None


def recognize(h: Graph) -> Optional[FamilyId]:
    """Family of ``h`` up to isomorphism, or None.

    Subcubic triangle-free graphs are matched directly; anything else is
    treated as a candidate line graph and matched through its root.
    """
    if h.max_degree <= 3 and find_triangle(h) is None:
        fid = _recognize_root(h)
        if fid is not None:
            return fid
    from .errors import GraphError
    from .linegraph import root_graph

    try:
        root, _ = root_graph(h)
    except GraphError:
        return None
    if root.m < 2:
        return None
    fid = _recognize_root(root)
    if fid is None or fid.kind == "OverfullC9Chords4":
        return None
    return line_family(fid)


# ----------------------------------------------------------------------
# contract checks
# ----------------------------------------------------------------------


def family_law(fid: FamilyId) -> Optional[tuple[int, int]]:
    """Expected (vertices, edges) of the root graph, where fixed."""
    i = fid.parameter
    return {
        "D6i1": lambda: (6 * i + 1, 9 * i + 1),
        "D6i5": lambda: (6 * i + 5, 9 * i + 7),
        "B9i1": lambda: (6 * i + 1, 9 * i + 1),
        "B9i7": lambda: (6 * i + 5, 9 * i + 7),
        "PetersenMinusVertex": lambda: (9, 12),
        "LinePetersenMinusVertex": lambda: (9, 12),
    }.get(fid.kind, lambda: None)()


@dataclass
class FamilyReport:
    family: FamilyId
    vertices: int
    edges: int
    matching: int
    counts_ok: bool
    subcubic: bool
    triangle_free: bool
    reduced: bool
    bridgeless: bool
    overfull: bool
    chromatic_index: Optional[int]
    line_claw_free: bool
    line_diamond_free: bool
    line_n222_free: Optional[bool]
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def validate_family_contract(fid: FamilyId, oracle_max_i: int = 3) -> FamilyReport:
    """Check one generated member against everything the family promises.

    The root graph is checked for line-graph kinds.  D kinds must be overfull;
    every kind must have chromatic index 4.
    """
    from .patterns import build_net, find_claw, find_diamond, find_induced
    from .reductions import reduce

    if fid.kind == "OverfullC9Chords4":
        raise NotGeneratable("check members of the set individually")
    if fid.parameter is not None and fid.parameter > oracle_max_i:
        raise OracleBudgetExceeded(f"parameter {fid.parameter} exceeds oracle budget {oracle_max_i}")
    root_kind = ROOT_OF.get(fid.kind, fid.kind)
    h = gen_family(FamilyId(root_kind, fid.parameter))
    lg = line_graph(h)[0]
    law = family_law(fid)
    _, trace = reduce(h)
    is_d = root_kind in ("D6i1", "D6i5")
    report = FamilyReport(
        family=fid,
        vertices=h.n,
        edges=h.m,
        matching=matching_number(h).size,
        counts_ok=law == (h.n, h.m),
        subcubic=h.max_degree <= 3,
        triangle_free=find_triangle(h) is None,
        reduced=len(trace) == 0,
        bridgeless=not bridges(h),
        overfull=h.m > matching_number(h).size * h.max_degree,
        chromatic_index=chromatic_index(h),
        line_claw_free=find_claw(lg) is None,
        line_diamond_free=find_diamond(lg) is None,
        line_n222_free=(find_induced(build_net(2, 2, 2), lg) is None) if is_d else None,
    )
    checks = [
        ("vertex/edge counts", report.counts_ok),
        ("subcubic", report.subcubic),
        ("triangle-free", report.triangle_free),
        ("reduced", report.reduced),
        ("bridgeless", report.bridgeless),
        ("chromatic index 4", report.chromatic_index == 4),
        ("line graph claw-free", report.line_claw_free),
        ("line graph diamond-free", report.line_diamond_free),
    ]
    if is_d:
        checks += [("overfull", report.overfull), ("line graph N222-free", bool(report.line_n222_free))]
    report.problems = [name for name, ok in checks if not ok]
    return report
