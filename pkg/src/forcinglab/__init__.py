"""Zero forcing, PSD forcing, path/tree covers and minimum-rank intervals for small graphs."""

from .graph import Graph, GraphError, build_graph, complement, empty_graph
from .io import graph6_decode, graph6_encode
from .solvers import Budgets, CertifiedValue, DEFAULT_BUDGETS, Param, solve

__all__ = [
    "Graph", "GraphError", "build_graph", "complement", "empty_graph",
    "graph6_decode", "graph6_encode",
    "Budgets", "CertifiedValue", "DEFAULT_BUDGETS", "Param", "solve",
]
__version__ = "0.1.0"
