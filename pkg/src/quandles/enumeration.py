"""Exhaustive generation of all quandles of a small order.

The search fills the table column by column. Candidate columns are the
permutations fixing the column index (idempotency pins the diagonal,
right-invertibility makes columns permutations), and right
self-distributivity is enforced incrementally through its equivalent
translation form R_k R_j R_k^-1 = R_{j*k}: whenever two columns are known,
the column of their product is forced, so each guess propagates. Every
table of the requested order is emitted exactly once; with ``up_to_iso``
the stream is reduced to one canonical representative per isomorphism
class.

Worker partitions split the search by a prefix of the first table row and
share nothing, so they can run in separate processes; a deterministic
result then requires sorting the merged output, which
``enumerate_parallel`` does.
"""

from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import permutations
from typing import Callable, Iterator, Optional

from .checks import has_repeat_free_profile
from .orbits import is_connected
from .perm import Permutation
from .quandle import Quandle

DEFAULT_ORDER_GUARD = 8

PREDICATES: dict[str, Callable[[Quandle], bool]] = {
    "latin": lambda q: q.is_latin,
    "connected": is_connected,
    "distinct-lengths": has_repeat_free_profile,
    "unique-fixed-point": lambda q: q.has_unique_fixed_points,
}


class OrderTooLargeError(ValueError):
    def __init__(self, order: int, guard: int):
        super().__init__(
            f"order {order} exceeds the search guard {guard};"
            " raise order_guard explicitly to run anyway"
        )


@dataclass(frozen=True)
class EnumerationTask:
    """One enumeration request, optionally restricted to a first-row prefix."""

    order: int
    up_to_iso: bool = False
    predicate_filter: Optional[str] = None
    partition_prefix: tuple[int, ...] = ()
    order_guard: int = DEFAULT_ORDER_GUARD

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if self.predicate_filter is not None and self.predicate_filter not in PREDICATES:
            raise ValueError(
                f"unknown predicate {self.predicate_filter!r};"
                f" known: {', '.join(sorted(PREDICATES))}"
            )
        for v in self.partition_prefix:
            if not 1 <= v <= self.order:
                raise ValueError(f"prefix value {v} out of range 1..{self.order}")


@functools.lru_cache(maxsize=None)
def _candidate_columns(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """For each column index j (1-based), the permutations with image j at j, in lex order."""
    all_perms = list(permutations(range(1, n + 1)))
    return tuple(
        tuple(p for p in all_perms if p[j - 1] == j) for j in range(1, n + 1)
    )


def _raw_tables(n: int, prefix: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All valid tables of order n whose first row starts with the prefix, in search order."""
    if len(prefix) > n:
        return
    candidates = _candidate_columns(n)
    cols: list[Optional[tuple[int, ...]]] = [None] * (n + 1)
    invs: list[Optional[tuple[int, ...]]] = [None] * (n + 1)
    klimit = len(prefix)

    def assign(j: int, p: tuple[int, ...], trail: list[int]) -> bool:
        queue = [(j, p)]
        while queue:
            k, pk = queue.pop()
            existing = cols[k]
            if existing is not None:
                if existing != pk:
                    return False
                continue
            if pk[k - 1] != k:
                return False
            if k <= klimit and pk[0] != prefix[k - 1]:
                return False
            inv = [0] * n
            for idx, v in enumerate(pk, 1):
                inv[v - 1] = idx
            cols[k] = pk
            invs[k] = tuple(inv)
            trail.append(k)
            for m in range(1, n + 1):
                pm = cols[m]
                if pm is None or m == k:
                    continue
                invk = invs[k]
                invm = invs[m]
                # R_k R_m R_k^-1 = R_{m*k} and R_m R_k R_m^-1 = R_{k*m}
                queue.append((
                    pk[m - 1],
                    tuple(pk[pm[invk[x] - 1] - 1] for x in range(n)),
                ))
                queue.append((
                    pm[k - 1],
                    tuple(pm[pk[invm[x] - 1] - 1] for x in range(n)),
                ))
        return True

    def search() -> Iterator[tuple[tuple[int, ...], ...]]:
        j = next((i for i in range(1, n + 1) if cols[i] is None), 0)
        if j == 0:
            yield tuple(
                tuple(cols[c][r] for c in range(1, n + 1)) for r in range(n)
            )
            return
        if j <= klimit:
            options = [p for p in candidates[j - 1] if p[0] == prefix[j - 1]]
        else:
            options = candidates[j - 1]
        for p in options:
            trail: list[int] = []
            if assign(j, p, trail):
                yield from search()
            for t in trail:
                cols[t] = None
                invs[t] = None

    yield from search()


def enumerate_quandles(task: EnumerationTask) -> Iterator[Quandle]:
    """Stream the quandles described by the task; deterministic for a fixed task."""
    if task.order > task.order_guard:
        raise OrderTooLargeError(task.order, task.order_guard)
    predicate = PREDICATES[task.predicate_filter] if task.predicate_filter else None
    stream = (Quandle(rows) for rows in _raw_tables(task.order, task.partition_prefix))
    if predicate is not None:
        stream = (q for q in stream if predicate(q))
    if task.up_to_iso:
        stream = _iso_reduce(stream)
    return stream


def _iso_reduce(stream: Iterator[Quandle]) -> Iterator[Quandle]:
    """Keep one quandle per isomorphism class, emitted as its canonical form."""
    buckets: dict[tuple, list[Quandle]] = {}
    for q in stream:
        reps = buckets.setdefault(q.iso_signature(), [])
        if any(are_isomorphic(rep, q) is not None for rep in reps):
            continue
        reps.append(q)
        yield canonical_form(q)[0]


def are_isomorphic(a: Quandle, b: Quandle) -> Optional[Permutation]:
    """A relabeling sigma with sigma(x*y) = sigma(x)*'sigma(y), or None.

    Fast-rejects on order, profile and per-element invariant mismatches,
    then backtracks over invariant-compatible assignments.
    """
    if a.n != b.n:
        return None
    if a.profile() != b.profile():
        return None
    if a.iso_signature() != b.iso_signature():
        return None
    n = a.n
    inv_a = a.element_invariants()
    inv_b = b.element_invariants()
    candidates = [
        sorted(
            (y for y in range(1, n + 1) if inv_b[y - 1] == inv_a[x - 1]),
            key=lambda y: (y != x, y),
        )
        for x in range(1, n + 1)
    ]
    order = sorted(range(1, n + 1), key=lambda x: len(candidates[x - 1]))
    sigma = [0] * (n + 1)
    used = [False] * (n + 1)
    rows_a, rows_b = a.rows, b.rows

    def consistent_so_far(x: int, assigned: list[int]) -> bool:
        # Partial check: products already inside the assigned set must map
        # compatibly; the leaf check covers everything else.
        for p in assigned:
            for u, v in ((x, p), (p, x)):
                t = rows_a[u - 1][v - 1]
                st = sigma[t]
                if st and rows_b[sigma[u] - 1][sigma[v] - 1] != st:
                    return False
        return True

    def extend(k: int, assigned: list[int]) -> bool:
        if k == n:
            return all(
                sigma[rows_a[x - 1][y - 1]] == rows_b[sigma[x] - 1][sigma[y] - 1]
                for x in range(1, n + 1)
                for y in range(1, n + 1)
            )
        x = order[k]
        for y in candidates[x - 1]:
            if used[y]:
                continue
            sigma[x] = y
            used[y] = True
            if consistent_so_far(x, assigned):
                assigned.append(x)
                if extend(k + 1, assigned):
                    return True
                assigned.pop()
            sigma[x] = 0
            used[y] = False
        return False

    if extend(0, []):
        return Permutation(sigma[1:])
    return None


def canonical_form(q: Quandle) -> tuple[Quandle, Permutation]:
    """The lexicographically minimal relabeling of the table, with a witnessing map.

    Scans all n! relabelings with early row-by-row cutoff; meant for the
    small orders this package targets.
    """
    n = q.n
    rows = q.rows
    best: Optional[list[tuple[int, ...]]] = None
    best_sigma: Optional[tuple[int, ...]] = None
    for sigma in permutations(range(1, n + 1)):
        inv = [0] * n
        for i, v in enumerate(sigma, 1):
            inv[v - 1] = i
        cand: list[tuple[int, ...]] = []
        better = best is None
        worse = False
        for r in range(n):
            source_row = rows[inv[r] - 1]
            new_row = tuple(sigma[source_row[inv[c] - 1] - 1] for c in range(n))
            if not better:
                old_row = best[r]
                if new_row > old_row:
                    worse = True
                    break
                if new_row < old_row:
                    better = True
            cand.append(new_row)
        if worse or not better:
            continue
        best = cand
        best_sigma = sigma
    assert best is not None and best_sigma is not None
    return Quandle(best), Permutation(best_sigma)


def split_task(task: EnumerationTask, parts: int) -> list[EnumerationTask]:
    """Refine the task into share-nothing subtasks by extending the first-row prefix."""
    n = task.order
    prefixes = [task.partition_prefix]
    position = len(task.partition_prefix)
    while len(prefixes) < parts and position < n:
        position += 1
        if position == 1:
            values = [1]
        else:
            values = [v for v in range(1, n + 1) if v != position]
        prefixes = [p + (v,) for p in prefixes for v in values]
    return [replace(task, partition_prefix=p) for p in prefixes]


def _collect_rows(task: EnumerationTask) -> list[tuple[tuple[int, ...], ...]]:
    return [q.rows for q in enumerate_quandles(task)]


def enumerate_parallel(task: EnumerationTask, jobs: int) -> list[Quandle]:
    """Run the task over worker processes and merge deterministically.

    The merged output is sorted by table entries (canonical table entries
    when ``up_to_iso``), so any jobs count yields the same list.
    """
    if jobs <= 1:
        result = list(enumerate_quandles(task))
        result.sort(key=lambda q: q.rows)
        return result
    subtasks = split_task(replace(task, up_to_iso=False), jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        row_lists = list(pool.map(_collect_rows, subtasks))
    merged = (Quandle(rows) for row_list in row_lists for rows in row_list)
    if task.up_to_iso:
        result = list(_iso_reduce(merged))
    else:
        result = list(merged)
    result.sort(key=lambda q: q.rows)
    return result


def falsify(
    property_pair: tuple[str, str],
    max_order: int,
    order_guard: int = DEFAULT_ORDER_GUARD,
) -> Optional[Quandle]:
    """First quandle (by order, then search order) where hypothesis holds but conclusion fails.

    Searches isomorphism-class representatives, which is exhaustive because
    both predicates are isomorphism-invariant. Returns None when every
    order up to max_order is clean.
    """
    hyp_name, concl_name = property_pair
    for name in (hyp_name, concl_name):
        if name not in PREDICATES:
            raise ValueError(f"unknown predicate {name!r}; known: {', '.join(sorted(PREDICATES))}")
    hyp = PREDICATES[hyp_name]
    concl = PREDICATES[concl_name]
    for n in range(1, max_order + 1):
        task = EnumerationTask(order=n, up_to_iso=True, order_guard=order_guard)
        for q in enumerate_quandles(task):
            if hyp(q) and not concl(q):
                return q
    return None
