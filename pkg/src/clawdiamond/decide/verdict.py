"""Decision outcomes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..families import FamilyId
from ..graph import Edge, Graph
from ..patterns import PatternMatch

COLORABLE = "colorable"
CONTAINS_K4 = "contains_k4"
EXCEPTIONAL = "exceptional"
NOT_COLORABLE = "not_colorable"
OUT_OF_CLASS = "out_of_class"


@dataclass(frozen=True)
class Verdict:
    """``side`` is ``"vertex"`` when the decided graph is the line graph side
    and ``"edge"`` when it is the root side.

    Non-colourable outcomes carry ``pattern`` (a graph that cannot be
    3-coloured on the same side) and ``embedding`` of it into the input.
    ``out_of_class`` carries the forbidden pattern found instead.
    """

    kind: str
    side: str
    provenance: str
    vertex_coloring: Optional[dict[int, int]] = None
    edge_coloring: Optional[dict[Edge, int]] = None
    family: Optional[FamilyId] = None
    pattern_name: str = ""
    pattern: Optional[Graph] = None
    embedding: Optional[PatternMatch] = None
    reason: str = ""

    @property
    def colorable(self) -> bool:
        return self.kind == COLORABLE

    @property
    def certified_not_colorable(self) -> bool:
        return self.kind in (CONTAINS_K4, EXCEPTIONAL, NOT_COLORABLE)

    @property
    def coloring(self):
        return self.vertex_coloring if self.side == "vertex" else self.edge_coloring
