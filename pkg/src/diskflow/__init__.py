"""Census of boundary-tangent flow diagrams on the disk.

Counts, enumerates, classifies and renders the combinatorial diagrams of
fixed-point-free generic flows with n boundary nodes, and verifies the
census against exact Catalan-number formulas.
"""
from .combinat import a275607, alpha, catalan, t_count
from .census import CensusResult, enumerate_diagrams, maximal_cliques_generic, oracle_enumerate
from .geometry import GroupElement, TouchLine
from .graph import CompatibilityGraph, build_graph, compatible

__version__ = "1.0.0"

__all__ = [
    "CensusResult",
    "CompatibilityGraph",
    "GroupElement",
    "TouchLine",
    "a275607",
    "alpha",
    "build_graph",
    "catalan",
    "compatible",
    "enumerate_diagrams",
    "maximal_cliques_generic",
    "oracle_enumerate",
    "t_count",
    "__version__",
]
