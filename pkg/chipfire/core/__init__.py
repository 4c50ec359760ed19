"""
Core chip-firing machinery: graphs, solvers, words and quotients.
"""

from .graph import Edge, Vertex, WeightedGraph, apply_script, build_graph, is_legal
from .quotient import GroupAction, HalfEdgeGraph, build_quotient, pushforward, validate_action
from .solvers import is_winnable, linear_equiv, modified_burning, modified_greedy, q_reduce
from .types import Divisor, FiringScript, LaplacianMatrix, Word

__all__ = [
    "Divisor",
    "Edge",
    "FiringScript",
    "GroupAction",
    "HalfEdgeGraph",
    "LaplacianMatrix",
    "Vertex",
    "WeightedGraph",
    "Word",
    "apply_script",
    "build_graph",
    "build_quotient",
    "is_legal",
    "is_winnable",
    "linear_equiv",
    "modified_burning",
    "modified_greedy",
    "pushforward",
    "q_reduce",
    "validate_action",
]
