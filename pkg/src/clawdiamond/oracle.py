"""Ground truth at small order: exhaustive generation of connected subcubic
triangle-free graphs, exact chromatic index, and a cross-check of the
deciders and the structural statements against them."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional

from .canon import canonical_form
from .edgecolor import chromatic_index, is_overfull
from .errors import CapExceeded
from .families import _recognize_root
from .graph import Graph, _trusted, bridges
from .linegraph import line_graph
from .patterns import find_induced_c5, find_spider_subgraph
from .reductions import reduce

log = logging.getLogger(__name__)

HARD_CAP = 12


@dataclass(frozen=True)
class EnumerationSpec:
    max_n: int
    reduced_only: bool = False
    bridgeless_only: bool = False
    cap: int = HARD_CAP

    def __post_init__(self):
        if self.max_n > self.cap:
            raise CapExceeded(f"max_n={self.max_n} exceeds the cap {self.cap}")
        if self.max_n < 1:
            raise CapExceeded("max_n must be at least 1")


def is_reduced(h: Graph) -> bool:
    """No reduction applies to ``h``."""
    return len(reduce(h)[1]) == 0


def _children(g: Graph) -> Iterator[Graph]:
    """Add one vertex joined to an independent set of 1..3 vertices that still
    have spare degree."""
    room = [v for v in range(g.n) if g.degree(v) < 3]
    for size in (1, 2, 3):
        for pick in combinations(room, size):
            if any(g.has_edge(a, b) for a, b in combinations(pick, 2)):
                continue
            yield _trusted(g.n + 1, list(g.edges) + [(v, g.n) for v in pick])


def generate_levels(max_n: int) -> list[list[Graph]]:
    """``levels[k]`` holds one graph per isomorphism class on ``k + 1``
    vertices, sorted by canonical form.

    Every connected graph has a vertex whose removal leaves it connected, so
    growing connected graphs one vertex at a time reaches every class."""
    levels = [[_trusted(1, [])]]
    for _ in range(max_n - 1):
        seen: dict[str, Graph] = {}
        for parent in levels[-1]:
            for child in _children(parent):
                key = canonical_form(child)
                if key not in seen:
                    seen[key] = child
        levels.append([seen[k] for k in sorted(seen)])
    return levels


def enumerate_graphs(spec: EnumerationSpec) -> Iterator[Graph]:
    """Connected subcubic triangle-free graphs with at most ``max_n``
    vertices, one per isomorphism class, by order then canonical form."""
    for level in generate_levels(spec.max_n):
        for g in level:
            if spec.bridgeless_only and bridges(g):
                continue
            if spec.reduced_only and not is_reduced(g):
                continue
            yield g


def chromatic_index_exact(h: Graph) -> int:
    """Chromatic index by exact search at ``max_degree`` colours; one more
    colour always suffices."""
    return chromatic_index(h)


# ----------------------------------------------------------------------
# cross-validation
# ----------------------------------------------------------------------


@dataclass
class Row:
    form: str
    n: int
    m: int
    chromatic_index: int
    s333_free: bool
    has_c5: bool
    overfull: bool
    family: Optional[str]
    verdict: str
    agrees: bool
    provenance: str

    def to_line(self) -> str:
        flags = ",".join(
            name for name, on in (("s333free", self.s333_free), ("c5", self.has_c5), ("overfull", self.overfull)) if on
        )
        return (
            f"{self.form} n={self.n} m={self.m} chi={self.chromatic_index} flags={flags or '-'} "
            f"family={self.family or '-'} verdict={self.verdict} agree={'yes' if self.agrees else 'NO'}"
        )


@dataclass
class CrossValidationReport:
    max_n: int
    rows: list[Row] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    @property
    def exceptional(self) -> list[Row]:
        return [r for r in self.rows if r.family is not None]

    @property
    def fallbacks(self) -> list[Row]:
        """Rows where a structural branch handed over to exact search."""
        return [r for r in self.rows if "fallback" in r.provenance or "no engine witness" in r.provenance]

    def to_text(self) -> str:
        lines = [r.to_line() for r in self.rows]
        lines.append(
            f"# graphs={len(self.rows)} exceptional={len(self.exceptional)} "
            f"fallbacks={len(self.fallbacks)} violations={len(self.violations)}"
        )
        lines += [f"# VIOLATION {v}" for v in self.violations]
        return "\n".join(lines) + "\n"


def check_graph(h: Graph) -> tuple[Row, list[str]]:
    """Every check on one reduced connected root graph."""
    from .certificate import check_verdict
    from .decide import decide_auto

    form = canonical_form(h)
    chi = chromatic_index_exact(h)
    s333_free = find_spider_subgraph(h, 3, 3, 3) is None
    has_c5 = find_induced_c5(h) is not None
    over = is_overfull(h)
    fid = _recognize_root(h)
    g = line_graph(h)[0]
    verdict = decide_auto(g)
    colourable = chi <= 3
    problems = []
    kind = fid.kind if fid else None
    if s333_free and not has_c5 and kind not in ("D6i1", "D6i5") and not colourable:
        problems.append(f"{form}: no S333, no C5, not a D family, yet chromatic index {chi}")
    if s333_free and has_c5 and not (fid is not None and str(fid) in ("D6i1 i=1", "PetersenMinusVertex", "OverfullC9Chords4")) and not colourable:
        problems.append(f"{form}: no S333, has C5, not an exceptional graph, yet chromatic index {chi}")
    if over and chi != h.max_degree + 1:
        problems.append(f"{form}: overfull but chromatic index {chi}")
    if fid is not None and chi != 4:
        problems.append(f"{form}: recognised as {fid} but chromatic index {chi}")
    if verdict.colorable != colourable:
        problems.append(f"{form}: decide_auto says {verdict.kind}, chromatic index {chi}")
    ok, msg = check_verdict(g, verdict)
    if not ok:
        problems.append(f"{form}: certificate rejected: {msg}")
    row = Row(form, h.n, h.m, chi, s333_free, has_c5, over, str(fid) if fid else None,
              verdict.kind, not problems, verdict.provenance)
    return row, problems


def cross_validate(max_n: int, jobs: int = 1) -> CrossValidationReport:
    """Run :func:`check_graph` on every reduced connected graph with edges
    and at most ``max_n`` vertices."""
    if max_n > 11:
        raise CapExceeded(f"cross-validation is capped at 11 vertices, got {max_n}")
    graphs = [g for g in enumerate_graphs(EnumerationSpec(max_n, reduced_only=True)) if g.m > 0]
    report = CrossValidationReport(max_n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check_graph, graphs, chunksize=8))
    else:
        results = [check_graph(g) for g in graphs]
    for row, problems in results:
        report.rows.append(row)
        report.violations.extend(problems)
    return report
