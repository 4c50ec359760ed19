"""
Brute-force reference searches over bounded boxes of firing scripts.

Scripts are normalised along the kernel: the first vertex fires between 0
and c(v0) - 1 times, every other vertex within [-B, B]. A search that finds
nothing inside its box proves nothing outside it.
"""

import itertools
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, List, Optional, Tuple

import numpy as np

from chipfire.core.graph import WeightedGraph, apply_script
from chipfire.core.types import Divisor, FiringScript, VertexIndex
from chipfire.exceptions import BoxTooSmallWarning, NotQEffective


@dataclass(frozen=True)
class SearchBounds:
    radius: Optional[int] = None
    entry_bound: int = 1

    def script_radius(self, g: WeightedGraph, d: Optional[Divisor] = None) -> int:
        if self.radius is not None:
            return self.radius
        chips = sum(abs(x) for x in d) if d is not None else 2 * self.entry_bound * g.n
        return chips + g.n * g.graph_charge


def _laplacian_array(g: WeightedGraph) -> np.ndarray:
    return np.array(g.laplacian.entries, dtype=np.int64)


@lru_cache(maxsize=32)
def _script_box(g: WeightedGraph, radius: int) -> np.ndarray:
    ranges = [np.arange(g.charges[0])] + [np.arange(-radius, radius + 1)] * (g.n - 1)
    grid = np.meshgrid(*ranges, indexing="ij")
    return np.stack(grid, axis=-1).reshape(-1, g.n)


@lru_cache(maxsize=32)
def principal_table(g: WeightedGraph, radius: int) -> np.ndarray:
    """L·σ for every normalised σ in the box, one row each."""
    return _script_box(g, radius) @ _laplacian_array(g).T


def brute_winnable(
    g: WeightedGraph,
    d: Divisor,
    bounds: SearchBounds = SearchBounds(),
    certificate: Optional[FiringScript] = None,
) -> bool:
    if d.degree < 0:
        return False
    table = principal_table(g, bounds.script_radius(g, d))
    found = bool(((np.array(d.values, dtype=np.int64) - table) >= 0).all(axis=1).any())
    if certificate is not None and not found and apply_script(g, d, certificate).is_effective():
        warnings.warn(f"box search missed the certificate {certificate} for {d}", BoxTooSmallWarning)
    return found


def brute_q_reduced(
    g: WeightedGraph, d: Divisor, q: VertexIndex, bounds: SearchBounds = SearchBounds()
) -> bool:
    if not d.is_q_effective(q):
        raise NotQEffective("divisor is in debt away from q", str(d))
    lap = _laplacian_array(g)
    values = np.array(d.values, dtype=np.int64)
    others = [v for v in range(g.n) if v != q]
    ranges = [range(g.charges[v] + 1) if v != q else range(1) for v in range(g.n)]
    scripts = np.array(list(itertools.product(*ranges)), dtype=np.int64).reshape(-1, g.n)[1:]
    after = values - scripts @ lap.T
    if (after[:, others] >= 0).all(axis=1).any():
        return False
    table = principal_table(g, bounds.script_radius(g, d))
    reachable = values - table
    q_effective = (reachable[:, others] >= 0).all(axis=1)
    return not bool((reachable[q_effective, q] > d[q]).any())


def brute_kernel(g: WeightedGraph, bound: int) -> List[FiringScript]:
    """Every σ in [0, bound]^n with L·σ = 0, in lexicographic order."""
    scripts = np.array(list(itertools.product(range(bound + 1), repeat=g.n)), dtype=np.int64)
    zero = ~(scripts @ _laplacian_array(g).T).any(axis=1)
    return [FiringScript(tuple(int(x) for x in row)) for row in scripts[zero]]


def enumerate_degree_classes(
    g: WeightedGraph, k: int, bounds: SearchBounds = SearchBounds()
) -> List[Divisor]:
    """One representative per class among divisors of degree k with |entries| <= entry_bound."""
    b = bounds.entry_bound
    principal: FrozenSet[Tuple[int, ...]] = frozenset(
        map(tuple, principal_table(g, bounds.script_radius(g)).tolist())
    )
    representatives: List[Divisor] = []
    for values in itertools.product(range(-b, b + 1), repeat=g.n):
        if sum(values) != k:
            continue
        d = Divisor(values)
        if not any(tuple((r - d).values) in principal for r in representatives):
            representatives.append(d)
    return representatives
