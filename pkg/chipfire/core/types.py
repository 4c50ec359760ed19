"""
Core value types for weighted chip-firing.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, List, Optional, Tuple, TypeVar

import numpy as np
from typing_extensions import TypeAlias

from ..exceptions import DimensionMismatch

VertexIndex: TypeAlias = int

V = TypeVar("V", bound="IntVector")


@dataclass(frozen=True)
class IntVector:
    """Integer vector indexed by dense vertex indices."""

    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))

    @classmethod
    def zero(cls: type[V], n: int) -> V:
        return cls((0,) * n)

    @classmethod
    def unit(cls: type[V], n: int, v: VertexIndex, k: int = 1) -> V:
        """The vector with k at v and 0 elsewhere."""
        values = [0] * n
        values[v] = k
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, index: VertexIndex) -> int:
        return self.values[index]

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.values) + ")"

    def _check(self, other: "IntVector") -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if len(other) != len(self):
            raise DimensionMismatch("vector lengths differ", f"{len(self)} vs {len(other)}")

    def __add__(self: V, other: V) -> V:
        self._check(other)
        return type(self)(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self: V, other: V) -> V:
        self._check(other)
        return type(self)(tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self: V) -> V:
        return type(self)(tuple(-a for a in self.values))

    def scaled(self: V, k: int) -> V:
        return type(self)(tuple(k * a for a in self.values))

    def with_added(self: V, v: VertexIndex, k: int = 1) -> V:
        """Copy with k added at v."""
        values = list(self.values)
        values[v] += k
        return type(self)(tuple(values))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=object)


@dataclass(frozen=True, eq=True)
class Divisor(IntVector):
    """Chip count per vertex."""

    @property
    def degree(self) -> int:
        return sum(self.values)

    def is_effective(self) -> bool:
        return all(x >= 0 for x in self.values)

    def is_q_effective(self, q: VertexIndex) -> bool:
        """Out of debt everywhere except possibly at q."""
        return all(x >= 0 for i, x in enumerate(self.values) if i != q)

    def dominates(self, other: "Divisor") -> bool:
        """Pointwise self >= other."""
        self._check(other)
        return all(a >= b for a, b in zip(self.values, other.values))

    def strictly_dominates(self, other: "Divisor") -> bool:
        return self.dominates(other) and self.values != other.values


@dataclass(frozen=True, eq=True)
class FiringScript(IntVector):
    """Net lending moves per vertex; negative entries borrow."""

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.values)


@dataclass(frozen=True)
class LaplacianMatrix:
    """Weighted Laplacian; column j is the principal divisor of one lending move at v_j."""

    entries: Tuple[Tuple[int, ...], ...]

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=object).reshape(self.size, self.size)

    @property
    def size(self) -> int:
        return len(self.entries)

    def column(self, j: VertexIndex) -> Tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def apply(self, script: FiringScript) -> Divisor:
        """The divisor L·σ."""
        if len(script) != self.size:
            raise DimensionMismatch("script length differs from vertex count", len(script))
        if self.size == 0:
            return Divisor(())
        return Divisor(tuple(self.array.dot(script.as_array())))

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class Word:
    """Burn sequence: each vertex v occurs exactly c(v) times."""

    letters: Tuple[VertexIndex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[VertexIndex]:
        return iter(self.letters)

    def index_set(self, v: VertexIndex) -> Tuple[int, ...]:
        """1-based positions at which v occurs."""
        return tuple(n for n, letter in enumerate(self.letters, start=1) if letter == v)

    def reversed(self) -> "Word":
        return Word(tuple(reversed(self.letters)))


@dataclass(frozen=True)
class BurnCandidate:
    """Outcome of one inner burning loop with q fired f times."""

    f: int
    script: FiringScript
    q_loss: int  # (L·σ_f)(q)
    trace: Tuple[Tuple[VertexIndex, int], ...]
    passes: int


@dataclass(frozen=True)
class BurnReport:
    """Result of the modified burning algorithm."""

    script: FiringScript
    selected: int
    candidates: Tuple[BurnCandidate, ...]
    iterations: int

    @property
    def trace(self) -> Tuple[Tuple[VertexIndex, int], ...]:
        """Burns as (vertex, pass) pairs for the selected candidate; q is not listed."""
        return self.candidates[self.selected].trace

    @property
    def burn_count(self) -> int:
        """Burns including q's own ignition."""
        return 1 + len(self.trace)

    @property
    def is_zero(self) -> bool:
        return self.script.is_zero()


@dataclass(frozen=True)
class GreedyResult:
    """Outcome of the modified greedy algorithm."""

    winnable: bool
    script: Optional[FiringScript] = None
    witness: Optional[Divisor] = None
    borrows: Tuple[int, ...] = ()
    steps: int = 0


@dataclass(frozen=True)
class Reduction:
    """A divisor together with the cumulative script that produced it."""

    divisor: Divisor
    script: FiringScript
    rounds: int = 0


@dataclass(frozen=True)
class Winnability:
    """Winnability decision with its certificate."""

    winnable: bool
    reduced: Optional[Divisor] = None
    witness: Optional[Divisor] = None
    script: Optional[FiringScript] = None


@dataclass(frozen=True)
class JacobianDescription:
    """Invariant factors d1 | d2 | ... of the Jacobian group."""

    factors: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def order(self) -> int:
        order = 1
        for factor in self.factors:
            order *= factor
        return order

    def __str__(self) -> str:
        if not self.factors:
            return "trivial"
        return " x ".join(f"Z/{d}" for d in self.factors)
