"""
Burn sequences and the maximal unwinnable divisors they produce.

A word is an ordering of the vertices in which every v occurs c(v) times and
q comes first. Each word W determines a divisor D(W): for the n-th letter v,
f_n(v) counts the chips v would hold after its neighbours have each fired as
often as they appear before position n, and D(W)(v) is the least such count
over the positions of v, less one.
"""

import logging
from dataclasses import dataclass
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from ..config import DEFAULT_CONFIG, SolverConfig
from ..exceptions import ChargeAtQNotOne, InvalidWord, NotQReduced
from .graph import WeightedGraph
from .solvers import is_maximally_unwinnable, linear_equiv, modified_burning, q_reduce
from .types import Divisor, VertexIndex, Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CensusEntry:
    """A distinct D(W) with the first word producing it."""

    word: Word
    divisor: Divisor
    class_representative: Divisor
    verified: bool = True


@dataclass(frozen=True)
class Census:
    """Non-dominated divisors among all D(W) with W(1) = q.

    `entries` are the q-effective ones that pass the maximality check,
    `unverified` the q-effective ones that fail it, `flagged` the rest.
    """

    q: VertexIndex
    entries: Tuple[CensusEntry, ...]
    flagged: Tuple[CensusEntry, ...]
    unverified: Tuple[CensusEntry, ...]
    word_count: int
    distinct_count: int


@dataclass(frozen=True)
class SumClass:
    representative: Divisor
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def shared(self) -> bool:
        return len(self.pairs) > 1


@dataclass(frozen=True)
class PairingReport:
    """Sum classes of pairs of census divisors."""

    classes: Tuple[SumClass, ...]
    canonical_guess: Divisor
    canonical_matches: Tuple[int, ...]
    reverse_sums: Tuple[Divisor, ...]
    reverse_sums_agree: bool


def check_word(g: WeightedGraph, w: Word) -> None:
    """Raise InvalidWord unless every vertex occurs exactly c(v) times."""
    if len(w) != sum(g.charges):
        raise InvalidWord("word length differs from the total charge", f"{len(w)} != {sum(g.charges)}")
    counts = [0] * g.n
    for letter in w:
        if not 0 <= letter < g.n:
            raise InvalidWord("word uses an unknown vertex", letter)
        counts[letter] += 1
    for v, (count, charge) in enumerate(zip(counts, g.charges)):
        if count != charge:
            raise InvalidWord(f"{g.vertices[v].id} occurs {count} times, expected {charge}", g.word_label(w))


def step_count(w: Word, v: VertexIndex, n: int) -> int:
    """k_v(n): occurrences of v strictly before position n (1-based)."""
    return sum(1 for m in w.index_set(v) if m < n)


def h_value(g: WeightedGraph, w: Word, n: int, v: VertexIndex, u: VertexIndex) -> int:
    """Net chips v has received from u by position n."""
    k_u, k_v = step_count(w, u, n), step_count(w, v, n)
    total = 0
    for edge in g.edges:
        if {edge.u, edge.v} == {u, v} and u != v:
            total += edge.mult * (k_u * g.weights[u] - k_v * g.weights[v]) // edge.weight
    return total


def f_value(g: WeightedGraph, w: Word, n: int, v: VertexIndex) -> int:
    return sum(h_value(g, w, n, v, u) for u in g.neighbors(v))


def divisor_of_word(g: WeightedGraph, w: Word) -> Divisor:
    """D(W)(v) = min over positions i of v of f_i(v), minus one."""
    check_word(g, w)
    return Divisor(tuple(min(f_value(g, w, i, v) for i in w.index_set(v)) - 1 for v in range(g.n)))


def _require_unit_charge(g: WeightedGraph, q: VertexIndex) -> None:
    if g.charges[q] != 1:
        raise ChargeAtQNotOne(f"c(q) is {g.charges[q]}", g.vertices[q].id)


def word_of_divisor(g: WeightedGraph, d: Divisor, q: VertexIndex) -> Word:
    """The burn order of a q-reduced divisor, q first."""
    _require_unit_charge(g, q)
    g.check_vector(d)
    if not d.is_q_effective(q):
        raise NotQReduced("divisor is not q-effective", str(d))
    report = modified_burning(g, d, q)
    if not report.is_zero:
        raise NotQReduced("burning found a legal script", f"{d} fires {report.script}")
    return Word((q,) + tuple(v for v, _ in report.trace))


def word_count(g: WeightedGraph, q: VertexIndex) -> int:
    """Number of words with W(1) = q: (L-1)! / prod c(v)!."""
    _require_unit_charge(g, q)
    count = factorial(sum(g.charges) - 1)
    for charge in g.charges:
        count //= factorial(charge)
    return count


def enumerate_words(g: WeightedGraph, q: VertexIndex) -> Iterator[Word]:
    """Every word starting at q, tails in lexicographic order of vertex index."""
    _require_unit_charge(g, q)
    tail: List[VertexIndex] = []
    for v, charge in enumerate(g.charges):
        if v != q:
            tail.extend([v] * charge)
    for permutation in multiset_permutations(tail):
        yield Word((q,) + tuple(permutation))


def reverse_word(w: Word) -> Word:
    return w.reversed()


def max_unwinnable_census(
    g: WeightedGraph, q: VertexIndex, config: SolverConfig = DEFAULT_CONFIG
) -> Census:
    """Distinct D(W) not strictly dominated by another D(W).

    Entries are the q-effective survivors that are unwinnable and become
    winnable with any single extra chip. Survivors failing that check go to
    `unverified`; survivors in debt away from q go to `flagged`.
    """
    first_word: Dict[Divisor, Word] = {}
    total = 0
    for w in enumerate_words(g, q):
        total += 1
        first_word.setdefault(divisor_of_word(g, w), w)
    pool = list(first_word)
    entries: List[CensusEntry] = []
    flagged: List[CensusEntry] = []
    unverified: List[CensusEntry] = []
    for d in pool:
        if any(other.strictly_dominates(d) for other in pool):
            continue
        reduced = q_reduce(g, d, q, config).divisor
        if not d.is_q_effective(q):
            flagged.append(CensusEntry(first_word[d], d, reduced, False))
        elif is_maximally_unwinnable(g, d, config):
            entries.append(CensusEntry(first_word[d], d, reduced))
        else:
            logger.info("%s from %s is not maximal unwinnable", d, g.word_label(first_word[d]))
            unverified.append(CensusEntry(first_word[d], d, reduced, False))
    logger.debug("census at %s: %d words, %d distinct, %d kept", g.vertices[q].id, total, len(pool), len(entries))
    return Census(q, tuple(entries), tuple(flagged), tuple(unverified), total, len(pool))


def _class_of(g: WeightedGraph, classes: Sequence[Divisor], d: Divisor) -> Optional[int]:
    for i, representative in enumerate(classes):
        if linear_equiv(g, representative, d) is not None:
            return i
    return None


def pairing_exploration(g: WeightedGraph, census: Census) -> PairingReport:
    """Group pairs i <= j of census divisors by the class of D_i + D_j."""
    divisors = [entry.divisor for entry in census.entries]
    representatives: List[Divisor] = []
    members: List[List[Tuple[int, int]]] = []
    for i in range(len(divisors)):
        for j in range(i, len(divisors)):
            total = divisors[i] + divisors[j]
            index = _class_of(g, representatives, total)
            if index is None:
                representatives.append(total)
                members.append([])
                index = len(representatives) - 1
            members[index].append((i, j))
    classes = tuple(SumClass(r, tuple(m)) for r, m in zip(representatives, members))
    guess = Divisor(tuple(x - 2 for x in g.valencies))
    matches = tuple(i for i, r in enumerate(representatives) if linear_equiv(g, r, guess) is not None)
    reverse_sums = tuple(
        entry.divisor + divisor_of_word(g, reverse_word(entry.word)) for entry in census.entries
    )
    agree = all(linear_equiv(g, reverse_sums[0], s) is not None for s in reverse_sums[1:])
    if not matches:
        logger.info("val - 2 = %s matches no sum class", guess)
    return PairingReport(classes, guess, matches, reverse_sums, agree)

