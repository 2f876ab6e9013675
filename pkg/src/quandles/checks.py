"""Mechanical checkers for the structural facts the toolkit is built around.

Each checker evaluates a hypothesis and a conclusion independently and
reports whether the implication holds on the given quandle, with witness
tuples for any failing instance. Nothing is assumed: the checkers double as
a falsification harness, so even statements that are theorems get their
conclusion recomputed from scratch.

The statements covered:

* conjugation identity -- conjugating a right translation by another gives
  the right translation of the product: R_k R_j R_k^-1 = R_{j*k}.
* cycle shift -- on a cycle relabeled to consecutive integers, f^(j-i)
  maps i to j.
* cycle length division -- if f is an automorphism and x*y = z, the length
  of the f-cycle of z divides lcm of the lengths of the cycles of x and y.
* left refinement -- if R_i has cycles of distinct lengths and every right
  translation has a unique fixed point, then L_i is a permutation and each
  of its cycles sits inside a cycle of R_i.
* latin sufficiency -- if every right translation has cycles of distinct
  lengths, the quandle is latin.
* latin necessary conditions -- a latin quandle is connected and all its
  right translations have a unique fixed point.
* regular cycle -- Hayashi's conjecture: every right translation of a
  finite connected quandle has a cycle as long as the permutation's order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .orbits import is_connected, orbits
from .perm import Permutation
from .quandle import Quandle

DEFAULT_WITNESS_CAP = 16


@dataclass(frozen=True, eq=False)
class CheckReport:
    """Structured verdict of one checker run.

    ``witnesses`` holds up to a cap of failing instances; ``failure_count``
    is the total number observed. ``consistent`` is the implication
    hypothesis => conclusion; a False value on a checker covering a proved
    statement is a counterexample (or an implementation fault).
    """

    name: str
    hypothesis_holds: bool
    conclusion_holds: bool
    counted_instances: int
    witnesses: tuple[tuple[int, ...], ...] = ()
    failure_count: int = 0
    details: Mapping[str, object] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return (not self.hypothesis_holds) or self.conclusion_holds


def render_report(report: CheckReport) -> str:
    """One status line per report."""
    status = "pass" if report.consistent else "FAIL"
    line = (
        f"{report.name}: {status}"
        f" hypothesis={'yes' if report.hypothesis_holds else 'no'}"
        f" conclusion={'yes' if report.conclusion_holds else 'no'}"
        f" instances={report.counted_instances}"
    )
    if report.failure_count:
        shown = " ".join(str(w) for w in report.witnesses)
        line += f" failures={report.failure_count} witnesses={shown}"
    return line


def report_record(report: CheckReport) -> dict:
    """JSON-ready record with the full report contents."""
    return {
        "name": report.name,
        "hypothesis": report.hypothesis_holds,
        "conclusion": report.conclusion_holds,
        "consistent": report.consistent,
        "instances": report.counted_instances,
        "failures": report.failure_count,
        "witnesses": [list(w) for w in report.witnesses],
        "details": {k: v for k, v in report.details.items()},
    }


def _capped(failures: list[tuple[int, ...]], cap: int) -> tuple[tuple, int]:
    return tuple(failures[:cap]), len(failures)


def check_conjugation_identity(q: Quandle, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """R_k R_j R_k^-1 = R_{j*k} for all j, k, checked pointwise as R_k R_j = R_{j*k} R_k."""
    n = q.n
    cols = q.columns()
    failures = []
    for j in range(1, n + 1):
        colj = cols[j - 1]
        for k in range(1, n + 1):
            colk = cols[k - 1]
            colm = cols[colk[j - 1] - 1]
            for x in range(n):
                if colk[colj[x] - 1] != colm[colk[x] - 1]:
                    failures.append((j, k))
                    break
    witnesses, count = _capped(failures, witness_cap)
    return CheckReport(
        name="conjugation-identity",
        hypothesis_holds=True,
        conclusion_holds=count == 0,
        counted_instances=n * n,
        witnesses=witnesses,
        failure_count=count,
    )


def consecutive_cycle_form(p: Permutation) -> tuple[Permutation, tuple[int, ...]]:
    """Relabel so cycles become consecutive blocks, shorter cycles first.

    Returns the relabeled permutation together with the relabeling map
    (old element x maps to new element relabeling[x-1]). Cycles of equal
    length keep their order by minimal element.
    """
    cycles = sorted(p.cycles(), key=lambda c: (len(c), c[0]))
    relabeling = [0] * p.n
    images = [0] * p.n
    base = 0
    for cycle in cycles:
        m = len(cycle)
        for pos, x in enumerate(cycle):
            relabeling[x - 1] = base + pos + 1
        for pos in range(m):
            images[base + pos] = base + (pos + 1) % m + 1
        base += m
    return Permutation(images), tuple(relabeling)


def check_cycle_shift(p: Permutation, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """f^(j-i) maps i to j whenever i, j share a cycle of the consecutive-relabeled f."""
    f, relabeling = consecutive_cycle_form(p)
    failures = []
    counted = 0
    for cycle in f.cycles():
        for i in cycle:
            for j in cycle:
                counted += 1
                if (f ** (j - i))(i) != j:
                    failures.append((i, j))
    witnesses, count = _capped(failures, witness_cap)
    return CheckReport(
        name="cycle-shift",
        hypothesis_holds=True,
        conclusion_holds=count == 0,
        counted_instances=counted,
        witnesses=witnesses,
        failure_count=count,
        details={"relabeling": relabeling},
    )


def check_cycle_length_division(q: Quandle, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """l_z divides lcm(l_x, l_y) for z = x*y, cycle lengths taken under every R_k."""
    n = q.n
    rows = q.rows
    failures = []
    for k in range(1, n + 1):
        f = q.right_translation(k)
        length_of = [0] * n
        for cycle in f.cycles():
            for x in cycle:
                length_of[x - 1] = len(cycle)
        for x in range(1, n + 1):
            lx = length_of[x - 1]
            row = rows[x - 1]
            for y in range(1, n + 1):
                lz = length_of[row[y - 1] - 1]
                if math.lcm(lx, length_of[y - 1]) % lz != 0:
                    failures.append((k, x, y))
    witnesses, count = _capped(failures, witness_cap)
    return CheckReport(
        name="cycle-length-division",
        hypothesis_holds=True,
        conclusion_holds=count == 0,
        counted_instances=n ** 3,
        witnesses=witnesses,
        failure_count=count,
    )


def check_left_refinement(q: Quandle, i: int, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Distinct R_i cycle lengths + unique fixed points => L_i permutes and refines R_i.

    The conclusion is evaluated unconditionally so the report can show
    whether it holds even when the hypothesis fails.
    """
    right = q.right_translation(i)
    hypothesis = right.cycle_structure().has_distinct_lengths and q.has_unique_fixed_points
    left = q.left_translation_map(i)
    failures = []
    if left.is_permutation:
        right_sets = [frozenset(c) for c in right.cycles()]
        contained = True
        for cycle in left.perm.cycles():
            cset = set(cycle)
            if not any(cset <= rs for rs in right_sets):
                contained = False
                failures.append(tuple(cycle))
        conclusion = contained
    else:
        conclusion = False
        seen = set()
        for v in left.mapping:
            if v in seen:
                failures.append((i, v))
                break
            seen.add(v)
    witnesses, count = _capped(failures, witness_cap)
    return CheckReport(
        name="left-refinement",
        hypothesis_holds=hypothesis,
        conclusion_holds=conclusion,
        counted_instances=1,
        witnesses=witnesses if hypothesis else witnesses[:0],
        failure_count=count if hypothesis else 0,
        details={"element": i, "left_is_permutation": left.is_permutation},
    )


def has_repeat_free_profile(q: Quandle) -> bool:
    """True iff every right translation has cycles of pairwise distinct lengths."""
    return all(cs.has_distinct_lengths for cs in q.column_structures())


def check_latin_sufficiency(q: Quandle) -> CheckReport:
    """Repeat-free profile => latin; an inconsistent report is a counterexample."""
    hypothesis = has_repeat_free_profile(q)
    conclusion = q.is_latin
    witnesses: tuple[tuple[int, ...], ...] = ()
    if hypothesis and not conclusion:
        witnesses = (tuple(v for row in q.rows for v in row),)
    return CheckReport(
        name="latin-sufficiency",
        hypothesis_holds=hypothesis,
        conclusion_holds=conclusion,
        counted_instances=1,
        witnesses=witnesses,
        failure_count=len(witnesses),
    )


def check_latin_necessary_conditions(q: Quandle, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Latin => all right translations have a unique fixed point, and connected."""
    latin = q.is_latin
    unique_fp = q.has_unique_fixed_points
    blocks = orbits(q)
    connected = len(blocks) == 1
    failures = []
    if latin:
        if not unique_fp:
            for j in range(1, q.n + 1):
                for x in q.right_translation(j).fixed_points():
                    if x != j:
                        failures.append((j, x))
        if not connected:
            failures.append(tuple(sorted(min(blocks, key=lambda b: (len(b), sorted(b))))))
    witnesses, count = _capped(failures, witness_cap)
    return CheckReport(
        name="latin-necessary-conditions",
        hypothesis_holds=latin,
        conclusion_holds=unique_fp and connected,
        counted_instances=q.n,
        witnesses=witnesses,
        failure_count=count,
        details={"unique_fixed_point": unique_fp, "connected": connected},
    )


def check_regular_cycle(q: Quandle, witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Hayashi's conjecture on one quandle: connected => every column has a regular cycle."""
    connected = is_connected(q)
    column_orders = []
    column_longest = []
    failures = []
    for j in range(1, q.n + 1):
        p = q.right_translation(j)
        column_orders.append(p.order)
        column_longest.append(p.longest_cycle_length)
        if not p.has_regular_cycle:
            failures.append((j,))
    witnesses, count = _capped(failures, witness_cap)
    return CheckReport(
        name="regular-cycle",
        hypothesis_holds=connected,
        conclusion_holds=count == 0,
        counted_instances=q.n,
        witnesses=witnesses,
        failure_count=count,
        details={
            "connected": connected,
            "column_orders": tuple(column_orders),
            "column_longest": tuple(column_longest),
        },
    )


def all_checks(q: Quandle, witness_cap: int = DEFAULT_WITNESS_CAP) -> list[CheckReport]:
    """Every checker on one quandle: table-level ones plus per-element ones."""
    reports = [
        check_conjugation_identity(q, witness_cap),
        check_cycle_length_division(q, witness_cap),
        check_latin_sufficiency(q),
        check_latin_necessary_conditions(q, witness_cap),
        check_regular_cycle(q, witness_cap),
    ]
    for i in range(1, q.n + 1):
        reports.append(check_left_refinement(q, i, witness_cap))
        reports.append(check_cycle_shift(q.right_translation(i), witness_cap))
    return reports


def search_nonconnected_refinement(source: Iterable[Quandle]) -> list[Quandle]:
    """Quandles meeting the left-refinement hypotheses at some element yet not connected.

    No such quandle is known; a nonempty result is a genuine finding, not
    an error. The result is sorted by (order, table entries) so streams may
    arrive in any order.
    """
    found = []
    for q in source:
        if not q.has_unique_fixed_points:
            continue
        if not any(
            q.right_translation(i).cycle_structure().has_distinct_lengths
            for i in range(1, q.n + 1)
        ):
            continue
        if not is_connected(q):
            found.append(q)
    found.sort(key=lambda q: (q.n, q.rows))
    return found
