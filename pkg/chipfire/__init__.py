"""
Chip-firing on weighted graphs.
"""

from .config import DEFAULT_CONFIG, SolverConfig
from .core import (
    Divisor,
    FiringScript,
    WeightedGraph,
    build_graph,
    is_winnable,
    linear_equiv,
    q_reduce,
)
from .exceptions import ChipFireError

__version__ = "0.1.0"

__all__ = [
    "ChipFireError",
    "DEFAULT_CONFIG",
    "Divisor",
    "FiringScript",
    "SolverConfig",
    "WeightedGraph",
    "build_graph",
    "is_winnable",
    "linear_equiv",
    "q_reduce",
]
