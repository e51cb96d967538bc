"""Exact independence polynomials, two-row Schur shadows, and mechanical
unimodality certificates for two families of trees."""

from .graphs import (
    Bipartition,
    Graph,
    bipartition_of,
    clan_graph,
    connected_components,
    induced_subgraph,
    is_forest,
    spider2,
    spider12,
    t3mn,
    t3mn_star,
)
from .intpoly import IntPoly, SequenceReport, analyze, indpoly_bruteforce, indpoly_tree
from .symfunc import (
    SymPoly2,
    TwoRowExpansion,
    chromatic_2var,
    chromatic_multicolor_2var,
    f_p_2var,
    schur_expand,
    schur_sym,
    y_g_2var,
)

__all__ = [
    "Bipartition",
    "Graph",
    "IntPoly",
    "SequenceReport",
    "SymPoly2",
    "TwoRowExpansion",
    "analyze",
    "bipartition_of",
    "chromatic_2var",
    "chromatic_multicolor_2var",
    "clan_graph",
    "connected_components",
    "f_p_2var",
    "indpoly_bruteforce",
    "indpoly_tree",
    "induced_subgraph",
    "is_forest",
    "schur_expand",
    "schur_sym",
    "spider2",
    "spider12",
    "t3mn",
    "t3mn_star",
    "y_g_2var",
]

__version__ = "0.1.0"
