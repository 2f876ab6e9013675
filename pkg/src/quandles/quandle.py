"""Validated quandle tables, translations, latinity, profiles.

A quandle is a set with a binary operation * satisfying three axioms:

  (i)   x*x = x                       (idempotency)
  (ii)  every column is a bijection   (right-invertibility)
  (iii) (x*y)*z = (x*z)*(y*z)         (right self-distributivity)

Tables are n x n with 1-based entries; ``rows[i-1][j-1]`` is i*j, so column
j is the right translation by j. Validation is eager: a Quandle object
cannot exist with a broken axiom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

from .perm import CycleStructure, DegreeMismatchError, Permutation


class TableError(ValueError):
    """Base class for quandle table validation failures."""


class EmptyTableError(TableError):
    def __init__(self):
        super().__init__("quandle tables must be nonempty")


class TableShapeError(TableError):
    def __init__(self, row: int, width: int, n: int):
        super().__init__(f"row {row} has {width} entries, expected {n}")
        self.row = row


class EntryOutOfRangeError(TableError):
    def __init__(self, i: int, j: int, value: object, n: int):
        super().__init__(f"entry at ({i},{j}) is {value!r}, expected an integer in 1..{n}")
        self.i, self.j, self.value = i, j, value


class NotIdempotentError(TableError):
    def __init__(self, i: int, value: int):
        super().__init__(f"idempotency fails: {i}*{i} = {value}")
        self.i = i


class ColumnNotPermutationError(TableError):
    def __init__(self, j: int, value: int):
        super().__init__(f"column {j} repeats the value {value}")
        self.j, self.value = j, value


class NotRightDistributiveError(TableError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"right distributivity fails at ({i},{j},{k}): ({i}*{j})*{k} != ({i}*{k})*({j}*{k})")
        self.i, self.j, self.k = i, j, k


class ElementOutOfRangeError(ValueError):
    def __init__(self, x: object, n: int):
        super().__init__(f"element {x!r} out of range 1..{n}")


class LeftTranslation(NamedTuple):
    """Row i viewed as the map j -> i*j, with its bijectivity verdict."""

    mapping: tuple[int, ...]
    is_permutation: bool
    perm: Optional[Permutation]


class Quandle:
    """An immutable, fully validated quandle table."""

    __slots__ = ("n", "rows", "_cols", "_translations", "_structures", "_profile",
                 "_latin", "_unique_fp", "_iso_sig")

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if n == 0:
            raise EmptyTableError()
        for i, row in enumerate(rows, 1):
            if len(row) != n:
                raise TableShapeError(i, len(row), n)
            for j, v in enumerate(row, 1):
                if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
                    raise EntryOutOfRangeError(i, j, v, n)
        for i in range(1, n + 1):
            if rows[i - 1][i - 1] != i:
                raise NotIdempotentError(i, rows[i - 1][i - 1])
        cols = []
        for j in range(n):
            seen = [False] * (n + 1)
            for row in rows:
                v = row[j]
                if seen[v]:
                    raise ColumnNotPermutationError(j + 1, v)
                seen[v] = True
            cols.append(tuple(row[j] for row in rows))
        # 0-based copy keeps the triple loop free of index arithmetic
        t = [[v - 1 for v in row] for row in rows]
        for i in range(n):
            ti = t[i]
            for j in range(n):
                tij = t[t[i][j]]
                for k in range(n):
                    if tij[k] != t[ti[k]][t[j][k]]:
                        raise NotRightDistributiveError(i + 1, j + 1, k + 1)
        self.rows = rows
        self.n = n
        self._cols = tuple(cols)
        self._translations: list[Optional[Permutation]] = [None] * n
        self._structures: Optional[tuple[CycleStructure, ...]] = None
        self._profile: Optional[Profile] = None
        self._latin: Optional[bool] = None
        self._unique_fp: Optional[bool] = None
        self._iso_sig = None

    def _check_element(self, x: int) -> None:
        if not isinstance(x, int) or not 1 <= x <= self.n:
            raise ElementOutOfRangeError(x, self.n)

    def op(self, i: int, j: int) -> int:
        """The product i*j."""
        self._check_element(i)
        self._check_element(j)
        return self.rows[i - 1][j - 1]

    def row(self, i: int) -> tuple[int, ...]:
        self._check_element(i)
        return self.rows[i - 1]

    def column(self, j: int) -> tuple[int, ...]:
        self._check_element(j)
        return self._cols[j - 1]

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return self._cols

    def right_translation(self, j: int) -> Permutation:
        """The permutation x -> x*j (column j)."""
        self._check_element(j)
        p = self._translations[j - 1]
        if p is None:
            p = Permutation(self._cols[j - 1])
            self._translations[j - 1] = p
        return p

    def left_translation_map(self, i: int) -> LeftTranslation:
        """Row i as a map, flagged by whether it is a bijection."""
        self._check_element(i)
        row = self.rows[i - 1]
        if len(set(row)) == self.n:
            return LeftTranslation(row, True, Permutation(row))
        return LeftTranslation(row, False, None)

    def left_translation(self, i: int) -> Optional[Permutation]:
        return self.left_translation_map(i).perm

    @property
    def is_latin(self) -> bool:
        """True iff every row is a bijection, i.e. the table is a latin square."""
        if self._latin is None:
            self._latin = all(len(set(row)) == self.n for row in self.rows)
        return self._latin

    @property
    def has_unique_fixed_points(self) -> bool:
        """True iff every right translation fixes exactly one element (necessarily j)."""
        if self._unique_fp is None:
            self._unique_fp = all(
                sum(1 for x, v in enumerate(col, 1) if v == x) == 1 for col in self._cols
            )
        return self._unique_fp

    def column_structures(self) -> tuple[CycleStructure, ...]:
        """Cycle structure of each right translation, in column order."""
        if self._structures is None:
            self._structures = tuple(
                self.right_translation(j).cycle_structure() for j in range(1, self.n + 1)
            )
        return self._structures

    def profile(self) -> "Profile":
        if self._profile is None:
            self._profile = Profile.of(self.column_structures())
        return self._profile

    def relabel(self, sigma: Permutation) -> "Quandle":
        """The isomorphic table with every element x renamed to sigma(x)."""
        if sigma.n != self.n:
            raise DegreeMismatchError(f"degree {sigma.n} != {self.n}")
        s = sigma.images
        inv = sigma.inverse().images
        rows = tuple(
            tuple(s[self.rows[inv[i] - 1][inv[j] - 1] - 1] for j in range(self.n))
            for i in range(self.n)
        )
        return Quandle(rows)

    def iso_signature(self):
        """Order-independent per-element invariants; equal for isomorphic quandles."""
        if self._iso_sig is None:
            self._iso_sig = tuple(sorted(self.element_invariants()))
        return self._iso_sig

    def element_invariants(self) -> tuple[tuple, ...]:
        """Per-element invariant preserved by isomorphism, indexed by element."""
        invs = []
        for x in range(1, self.n + 1):
            col_cs = self.column_structures()[x - 1].entries
            row = self.rows[x - 1]
            counts: dict[int, int] = {}
            fixes = 0
            for v in row:
                counts[v] = counts.get(v, 0) + 1
                if v == x:
                    fixes += 1
            invs.append((col_cs, tuple(sorted(counts.values())), fixes))
        return tuple(invs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Quandle) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Quandle({[list(r) for r in self.rows]!r})"


@dataclass(frozen=True)
class Profile:
    """The sorted list of cycle structures of all right translations.

    All n structures are stored even when they coincide; collapsing the
    connected case to a single structure happens only at rendering time.
    """

    structures: tuple[CycleStructure, ...]

    @classmethod
    def of(cls, structures: Sequence[CycleStructure]) -> "Profile":
        return cls(tuple(sorted(structures)))

    @property
    def is_uniform(self) -> bool:
        return all(cs == self.structures[0] for cs in self.structures)

    def __iter__(self) -> Iterator[CycleStructure]:
        return iter(self.structures)

    def __str__(self) -> str:
        if self.is_uniform:
            return str(self.structures[0])
        return "[" + ",".join(str(cs) for cs in self.structures) + "]"
