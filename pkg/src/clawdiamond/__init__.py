"""Decide 3-colourability of (claw, diamond)-free graphs with checkable certificates."""

from .graph import Graph, OddCycle, build_graph

__all__ = ["Graph", "OddCycle", "build_graph"]
__version__ = "0.1.0"
