"""Exact computation and comparison of domination polynomials of small graphs.

The package computes D(G,x) with exact integer coefficients, decides
pointwise dominance of polynomials on [0,inf) with certified root
isolation, exhaustively classifies the graph classes G(n,m) for optimal
and least-optimal members, and transfers the results to domination
reliability.  All verdicts use integer/rational arithmetic only.
"""

__version__ = "0.1.0"

from .graphs import Graph, from_edge_list, parse_graph6, to_graph6
from .polynomials import IntPoly, ComparisonVerdict, compare_on_nonneg
from .domination import DomPoly, count_by_subsets, count_by_inclusion_exclusion

__all__ = [
    "Graph",
    "from_edge_list",
    "parse_graph6",
    "to_graph6",
    "IntPoly",
    "ComparisonVerdict",
    "compare_on_nonneg",
    "DomPoly",
    "count_by_subsets",
    "count_by_inclusion_exclusion",
    "__version__",
]
