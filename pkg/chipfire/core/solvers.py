"""
Decision procedures for weighted chip-firing.

Winnability is decided two ways: the modified greedy algorithm (borrow at
in-debt vertices until every vertex has borrowed c(v) times) and reduction
via the modified burning algorithm (Dhar's burning generalized to scripts
bounded by the charges, run once for every number f < c(q) of q-firings).
"""

import logging
import math
from functools import reduce
from typing import Dict, List, Optional, Tuple

from sympy import ZZ, Matrix, Rational
from sympy.matrices.normalforms import invariant_factors

from ..config import DEFAULT_CONFIG, SolverConfig
from ..exceptions import IterationCapExceeded, NotQEffective
from .graph import WeightedGraph, apply_script, spanning_tree, tree_order_precedes
from .types import (
    BurnCandidate,
    BurnReport,
    Divisor,
    FiringScript,
    GreedyResult,
    JacobianDescription,
    Reduction,
    VertexIndex,
    Winnability,
)

logger = logging.getLogger(__name__)


def kernel_script(g: WeightedGraph) -> FiringScript:
    """The charges vector, which generates ker L."""
    return FiringScript(g.charges)


def modified_greedy(
    g: WeightedGraph, d: Divisor, config: SolverConfig = DEFAULT_CONFIG
) -> GreedyResult:
    """Borrow at the lowest-indexed in-debt vertex until D is effective or every m(v) >= c(v)."""
    g.check_vector(d)
    c = g.charges
    current = list(d)
    borrows = [0] * g.n
    steps = 0
    while any(x < 0 for x in current):
        if all(borrows[v] >= c[v] for v in range(g.n)):
            logger.debug("greedy: every vertex borrowed its charge, %s unwinnable", d)
            return GreedyResult(False, borrows=tuple(borrows), steps=steps)
        v = next(i for i, x in enumerate(current) if x < 0)
        current[v] += g.valencies[v]
        for u in range(g.n):
            current[u] -= g.transfers[v][u] if u != v else 0
        borrows[v] += 1
        steps += 1
        if steps > config.greedy_step_cap:
            raise IterationCapExceeded("greedy borrowing did not settle", f"{steps} steps on {d}")
    script = FiringScript(tuple(-b for b in borrows))
    return GreedyResult(True, script, Divisor(tuple(current)), tuple(borrows), steps)


def _check_q_effective(d: Divisor, q: VertexIndex) -> None:
    if not d.is_q_effective(q):
        raise NotQEffective("divisor is in debt away from q", str(d))


def burn_candidate(g: WeightedGraph, d: Divisor, q: VertexIndex, f: int) -> BurnCandidate:
    """Inner burning loop with σ(q) = f fixed.

    Starts from σ = c off q and decrements, in simultaneous passes, every
    vertex v != q left in debt by D - Lσ, until no vertex is in debt or the
    off-q part of σ is exhausted.
    """
    c = g.charges
    lap = g.laplacian
    sigma = list(c)
    sigma[q] = f
    others = [v for v in range(g.n) if v != q]
    trace: List[Tuple[VertexIndex, int]] = []
    passes = 0
    while any(sigma[v] != 0 for v in others):
        remaining = d - lap.apply(FiringScript(tuple(sigma)))
        burning = [v for v in others if remaining[v] < 0]
        if not burning:
            break
        passes += 1
        for v in burning:
            sigma[v] -= 1
            trace.append((v, passes))
    script = FiringScript(tuple(sigma))
    q_loss = lap.apply(script)[q]
    return BurnCandidate(f, script, q_loss, tuple(trace), passes)


def modified_burning(g: WeightedGraph, d: Divisor, q: VertexIndex) -> BurnReport:
    """Legal script leaving the most chips at q; the zero script iff d is q-reduced."""
    g.check_vector(d)
    _check_q_effective(d, q)
    candidates = tuple(burn_candidate(g, d, q, f) for f in range(g.charges[q]))
    # first minimizer of (L·σ_f)(q)
    selected = min(range(len(candidates)), key=lambda f: (candidates[f].q_loss, f))
    iterations = sum(candidate.passes for candidate in candidates)
    report = BurnReport(candidates[selected].script, selected, candidates, iterations)
    logger.debug(
        "burning %s at %s: f=%d selected, script %s, %d passes",
        d, g.vertices[q].id, selected, report.script, iterations,
    )
    return report


def iteration_bound(g: WeightedGraph, q: VertexIndex) -> int:
    """c(q) times the sum of the other charges."""
    return g.charges[q] * sum(x for v, x in enumerate(g.charges) if v != q)


def _lend(g: WeightedGraph, current: List[int], script: List[int], p: VertexIndex, k: int) -> None:
    current[p] -= k * g.valencies[p]
    for u in range(g.n):
        if u != p:
            current[u] += k * g.transfers[p][u]
    script[p] += k


def make_q_effective(
    g: WeightedGraph, d: Divisor, q: VertexIndex, keep_q_class: bool = False
) -> Reduction:
    """Clear debt away from q by lending down a BFS tree rooted at q.

    Vertices are visited in reverse BFS order; a vertex in debt is paid off by
    its parent p lending ceil(deficit / t) times, t being the chips p sends it
    per move. With keep_q_class, q's lending is rounded up to a multiple of
    c(q) and the script is shifted by the kernel so that it never fires q.
    """
    g.check_vector(d)
    order, parent = spanning_tree(g, q)
    current = list(d)
    script = [0] * g.n
    for v in reversed(order[1:]):
        if current[v] >= 0:
            continue
        p = parent[v]
        k = -(current[v] // g.transfers[p][v])  # ceiling division
        if keep_q_class and p == q:
            k = -(-k // g.charges[q]) * g.charges[q]
        _lend(g, current, script, p, k)
    result = FiringScript(tuple(script))
    if keep_q_class and script[q]:
        result = result - FiringScript(g.charges).scaled(script[q] // g.charges[q])
    return Reduction(Divisor(tuple(current)), result)


def _reduce_rounds(
    g: WeightedGraph,
    start: Reduction,
    q: VertexIndex,
    config: SolverConfig,
    within_q_class: bool,
) -> Reduction:
    current, script, rounds = start.divisor, start.script, 0
    while True:
        if within_q_class:
            step = burn_candidate(g, current, q, 0).script
        else:
            step = modified_burning(g, current, q).script
        if step.is_zero():
            return Reduction(current, script, rounds)
        rounds += 1
        if rounds > config.burning_round_cap:
            raise IterationCapExceeded("reduction did not reach a fixed point", f"{rounds} rounds")
        following = apply_script(g, current, step)
        if logger.isEnabledFor(logging.DEBUG) and not tree_order_precedes(g, following, current, q):
            logger.debug("burning round %d did not decrease %s in the tree order", rounds, current)
        current, script = following, script + step


def q_reduce(
    g: WeightedGraph, d: Divisor, q: VertexIndex, config: SolverConfig = DEFAULT_CONFIG
) -> Reduction:
    """A q-reduced divisor linearly equivalent to d, with the cumulative script."""
    reduction = _reduce_rounds(g, make_q_effective(g, d, q), q, config, within_q_class=False)
    logger.debug("q-reduced %s to %s in %d rounds", d, reduction.divisor, reduction.rounds)
    return reduction


def is_winnable(g: WeightedGraph, d: Divisor, config: SolverConfig = DEFAULT_CONFIG) -> Winnability:
    """Reduce at the first-listed vertex; winnable iff the reduced value there is >= 0."""
    g.check_vector(d)
    if d.degree < 0:
        return Winnability(False)
    q = 0
    reduction = q_reduce(g, d, q, config)
    if reduction.divisor[q] >= 0:
        return Winnability(True, reduction.divisor, reduction.divisor, reduction.script)
    return Winnability(False, reduction.divisor)


def is_maximally_unwinnable(
    g: WeightedGraph, d: Divisor, config: SolverConfig = DEFAULT_CONFIG
) -> bool:
    """Unwinnable, and winnable after adding one chip at any vertex."""
    if is_winnable(g, d, config).winnable:
        return False
    return all(is_winnable(g, d.with_added(v), config).winnable for v in range(g.n))


def linear_equiv(g: WeightedGraph, d1: Divisor, d2: Divisor) -> Optional[FiringScript]:
    """σ with d2 = d1 - Lσ and 0 <= σ(v0) < c(v0), or None.

    Dropping the last row and the v0 column of L leaves an invertible system;
    its exact rational solution is lifted along the kernel to the unique
    integral representative, if any.
    """
    g.check_vector(d1)
    g.check_vector(d2)
    if d1.degree != d2.degree:
        return None
    target = d1 - d2
    n = g.n
    if n == 1:
        return FiringScript((0,))
    lap = g.laplacian
    reduced = Matrix([[lap.entries[i][j] for j in range(1, n)] for i in range(n - 1)])
    rhs = Matrix([target[i] for i in range(n - 1)])
    particular = [Rational(0)] + list(reduced.LUsolve(rhs))
    c = g.charges
    for k in range(c[0]):
        shift = Rational(k, c[0])
        candidate = [x + shift * c[v] for v, x in enumerate(particular)]
        if all(x.q == 1 for x in candidate):
            return FiringScript(tuple(int(x) for x in candidate))
    return None


def q_class_index(
    g: WeightedGraph, d1: Divisor, d2: Divisor, q: VertexIndex
) -> Optional[int]:
    """f in [0, c(q)) such that d2 lies in the q-class of d1 fired f times at q."""
    script = linear_equiv(g, d1, d2)
    if script is None:
        return None
    return script[q] % g.charges[q]


def q_equivalent(g: WeightedGraph, d1: Divisor, d2: Divisor, q: VertexIndex) -> bool:
    """Linearly equivalent through a script that never fires q."""
    return q_class_index(g, d1, d2, q) == 0


def jacobian(g: WeightedGraph) -> JacobianDescription:
    """Torsion of coker L from its Smith normal form."""
    diagonal = invariant_factors(Matrix(g.laplacian.to_lists()), domain=ZZ)
    # sympy returns the chain d1 | d2 | ... followed by zeros
    return JacobianDescription(tuple(abs(int(x)) for x in diagonal if abs(int(x)) > 1))


def local_charge(g: WeightedGraph, q: VertexIndex) -> int:
    """lcm(gcd of neighbour transfers into q, val(q)) / val(q)."""
    valency = g.valencies[q]
    if valency == 0:
        return 1
    inflow = [g.transfers[v][q] for v in range(g.n) if v != q and g.transfers[v][q]]
    return math.lcm(reduce(math.gcd, inflow, 0), valency) // valency


def uniquely_reducing_vertices(g: WeightedGraph) -> Tuple[VertexIndex, ...]:
    """Vertices q with c_l(q) = c(q): every class has a single q-reduced form."""
    return tuple(q for q in range(g.n) if local_charge(g, q) == g.charges[q])


def enumerate_q_reduced(
    g: WeightedGraph, d: Divisor, q: VertexIndex, config: SolverConfig = DEFAULT_CONFIG
) -> Dict[int, Divisor]:
    """The q-reduced divisors of [d], keyed by the q-class index f < c(q).

    For each f the class of d fired f times at q is reduced without firing q,
    then kept only if it passes the full burning test.
    """
    g.check_vector(d)
    found: Dict[int, Divisor] = {}
    for f in range(g.charges[q]):
        shifted = apply_script(g, d, FiringScript.unit(g.n, q, f))
        start = make_q_effective(g, shifted, q, keep_q_class=True)
        candidate = _reduce_rounds(g, start, q, config, within_q_class=True).divisor
        if modified_burning(g, candidate, q).is_zero:
            found[f] = candidate
    logger.debug("q-class scan of %s: representatives at f=%s", d, sorted(found))
    return found
