"""Permutations on {1..n} and their cycle-level analysis.

Elements are 1-based everywhere: a permutation of degree n acts on the set
{1, .., n}. Cycle decompositions are kept in a canonical form (every cycle
starts at its minimal element, cycles sorted by minimal element) so that
string renderings and golden-file comparisons are deterministic.
"""

from __future__ import annotations

import functools
import math
from collections import Counter
from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Iterator, Sequence


class DegreeMismatchError(ValueError):
    """Raised when combining permutations of different degrees."""


@functools.total_ordering
@dataclass(frozen=True)
class CycleStructure:
    """Multiset of cycle lengths, stored as ascending (length, multiplicity) pairs.

    Renders in the usual compact notation: multiplicity-1 exponents are
    dropped, e.g. ``(1^2,4)`` for two fixed points and one 4-cycle.
    """

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = 0
        for length, mult in self.entries:
            if length <= prev:
                raise ValueError(f"cycle lengths must be strictly increasing: {self.entries}")
            if mult < 1:
                raise ValueError(f"multiplicities must be positive: {self.entries}")
            prev = length

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "CycleStructure":
        """Aggregate raw cycle lengths into a structure."""
        counts = Counter(lengths)
        return cls(tuple(sorted(counts.items())))

    @property
    def degree(self) -> int:
        """Number of points moved or fixed: sum of length * multiplicity."""
        return sum(length * mult for length, mult in self.entries)

    @property
    def cycle_count(self) -> int:
        return sum(mult for _, mult in self.entries)

    @property
    def has_distinct_lengths(self) -> bool:
        """True iff no two cycles have the same length."""
        return all(mult == 1 for _, mult in self.entries)

    @property
    def fixed_point_count(self) -> int:
        return self.entries[0][1] if self.entries and self.entries[0][0] == 1 else 0

    def lengths(self) -> tuple[int, ...]:
        """Every cycle length, repeated with multiplicity, ascending."""
        return tuple(chain.from_iterable((length,) * mult for length, mult in self.entries))

    def __lt__(self, other: "CycleStructure") -> bool:
        # Total order used to sort quandle profiles: lexicographic on the
        # expanded ascending length sequences, so (1^3) sorts before (1,2).
        return self.lengths() < other.lengths()

    def __str__(self) -> str:
        terms = (f"{length}^{mult}" if mult > 1 else str(length) for length, mult in self.entries)
        return "(" + ",".join(terms) + ")"


class Permutation:
    """A bijection on {1..n} with a cached cycle decomposition."""

    __slots__ = ("images", "_cycles")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        seen = [False] * (n + 1)
        for v in images:
            if not (1 <= v <= n) or seen[v]:
                raise ValueError(f"images are not a bijection of 1..{n}: {images}")
            seen[v] = True
        self.images = images
        self._cycles: tuple[tuple[int, ...], ...] | None = None

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build a permutation of degree n from disjoint cycles; omitted points stay fixed."""
        images = list(range(1, n + 1))
        touched = set()
        for cycle in cycles:
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                if not (1 <= a <= n):
                    raise ValueError(f"cycle element {a} out of range 1..{n}")
                if a in touched:
                    raise ValueError(f"cycles are not disjoint at element {a}")
                touched.add(a)
                images[a - 1] = b
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.images):
            raise ValueError(f"element {i} out of range 1..{len(self.images)}")
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition (self * other)(x) = self(other(x))."""
        if len(self.images) != len(other.images):
            raise DegreeMismatchError(f"degree {self.n} != {other.n}")
        s = self.images
        return Permutation(s[v - 1] for v in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images, 1):
            inv[v - 1] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        """k-fold composition; negative k uses the inverse."""
        n = len(self.images)
        images = [0] * n
        for cycle in self.cycles():
            m = len(cycle)
            for pos, a in enumerate(cycle):
                images[a - 1] = cycle[(pos + k) % m]
        return Permutation(images)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, each starting at its minimal element, sorted by that element."""
        if self._cycles is None:
            images = self.images
            seen = [False] * (len(images) + 1)
            cycles = []
            for start in range(1, len(images) + 1):
                if seen[start]:
                    continue
                cycle = [start]
                seen[start] = True
                nxt = images[start - 1]
                while nxt != start:
                    cycle.append(nxt)
                    seen[nxt] = True
                    nxt = images[nxt - 1]
                cycles.append(tuple(cycle))
            self._cycles = tuple(cycles)
        return self._cycles

    def cycle_structure(self) -> CycleStructure:
        return CycleStructure.from_lengths(len(c) for c in self.cycles())

    def fixed_points(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.images, 1) if v == i)

    @property
    def order(self) -> int:
        """Least k >= 1 with self**k equal to the identity: lcm of cycle lengths."""
        return math.lcm(*(len(c) for c in self.cycles()))

    @property
    def longest_cycle_length(self) -> int:
        return max(len(c) for c in self.cycles())

    @property
    def has_regular_cycle(self) -> bool:
        """True iff some cycle is as long as the permutation's order."""
        return self.order == self.longest_cycle_length

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)!r})"

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
