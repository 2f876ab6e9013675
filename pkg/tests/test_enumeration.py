import pytest

from quandles.constructions import dihedral
from quandles.enumeration import (
    EnumerationTask,
    OrderTooLargeError,
    are_isomorphic,
    canonical_form,
    enumerate_parallel,
    enumerate_quandles,
    falsify,
    split_task,
)
from quandles.orbits import is_connected
from quandles.perm import Permutation
from quandles.quandle import Quandle

from _oracles import column_search_quandles, naive_all_quandles, naive_isomorphic

# Raw (labeled) and isomorphism-class counts, frozen after cross-checking the
# propagation search against the plain generate-and-test column search at
# every order up to 6 (and against the 3^9 filter at order 3).
RAW_COUNTS = {1: 1, 2: 1, 3: 5, 4: 36, 5: 404, 6: 6658}
ISO_COUNTS = {1: 1, 2: 1, 3: 3, 4: 7, 5: 22, 6: 73}


class TestRawEnumeration:
    def test_order3_equals_naive_filter(self, enumerated):
        assert {q.rows for q in enumerated(3, False)} == naive_all_quandles(3)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_column_search(self, n, enumerated):
        assert {q.rows for q in enumerated(n, False)} == column_search_quandles(n)

    @pytest.mark.parametrize("n", sorted(RAW_COUNTS))
    def test_raw_counts(self, n, enumerated):
        assert len(enumerated(n, False)) == RAW_COUNTS[n]

    def test_emitted_tables_are_valid_and_unique(self, enumerated):
        tables = enumerated(4, False)
        assert len({q.rows for q in tables}) == len(tables)
        for q in tables:
            Quandle(q.rows)

    def test_deterministic_order(self):
        first = [q.rows for q in enumerate_quandles(EnumerationTask(4))]
        second = [q.rows for q in enumerate_quandles(EnumerationTask(4))]
        assert first == second

    def test_guard(self):
        with pytest.raises(OrderTooLargeError):
            list(enumerate_quandles(EnumerationTask(9)))
        # and a raised guard accepts the order
        EnumerationTask(9, order_guard=9)


class TestIsoReduction:
    @pytest.mark.parametrize("n", sorted(ISO_COUNTS))
    def test_iso_counts(self, n, enumerated):
        assert len(enumerated(n, True)) == ISO_COUNTS[n]

    def test_reps_are_canonical_and_pairwise_noniso(self, enumerated):
        reps = enumerated(4, True)
        for q in reps:
            assert canonical_form(q)[0].rows == q.rows
        for i, a in enumerate(reps):
            for b in reps[i + 1:]:
                assert are_isomorphic(a, b) is None
                assert naive_isomorphic(a.rows, b.rows) is None

    def test_every_raw_table_has_a_rep(self, enumerated):
        reps = enumerated(4, True)
        for q in enumerated(4, False):
            assert any(are_isomorphic(q, rep) is not None for rep in reps)


class TestAreIsomorphic:
    def test_self_isomorphism_finds_identity(self, q62):
        assert are_isomorphic(q62, q62) == Permutation.identity(6)

    def test_sigma_is_a_homomorphism(self, q94):
        shuffled = q94.relabel(Permutation.from_cycles(9, [(1, 5, 7), (2, 9)]))
        sigma = are_isomorphic(q94, shuffled)
        assert sigma is not None
        for x in range(1, 10):
            for y in range(1, 10):
                assert sigma(q94.op(x, y)) == shuffled.op(sigma(x), sigma(y))

    def test_profile_mismatch_rejected(self, q62):
        assert are_isomorphic(q62, dihedral(6)) is None

    def test_agrees_with_naive_search(self, enumerated):
        tables = enumerated(4, False)[:12]
        for a in tables:
            for b in tables:
                ours = are_isomorphic(a, b)
                naive = naive_isomorphic(a.rows, b.rows)
                assert (ours is None) == (naive is None)

    def test_isomorphic_quandles_share_invariants(self, enumerated):
        reps = {id(q): q for q in enumerated(5, False)[:40]}
        for a in reps.values():
            for b in reps.values():
                if are_isomorphic(a, b) is not None:
                    assert a.profile() == b.profile()
                    assert a.is_latin == b.is_latin
                    assert is_connected(a) == is_connected(b)


class TestCanonicalForm:
    def test_canonical_is_isomorphic_via_witness(self, q62):
        canon, sigma = canonical_form(q62)
        assert q62.relabel(sigma) == canon

    def test_canonical_is_minimal_over_all_relabelings(self, nonlatin3):
        from itertools import permutations as iterperms

        canon, _ = canonical_form(nonlatin3)
        smallest = min(
            nonlatin3.relabel(Permutation(s)).rows
            for s in iterperms(range(1, 4))
        )
        assert canon.rows == smallest

    def test_idempotent(self, q62):
        canon, _ = canonical_form(q62)
        assert canonical_form(canon)[0] == canon


class TestPredicatesAndFilters:
    def test_filtered_enumeration(self):
        latin = list(enumerate_quandles(EnumerationTask(4, predicate_filter="latin")))
        assert all(q.is_latin for q in latin)
        everything = list(enumerate_quandles(EnumerationTask(4)))
        assert len(latin) == sum(1 for q in everything if q.is_latin)

    def test_unknown_filter_rejected(self):
        with pytest.raises(ValueError):
            EnumerationTask(3, predicate_filter="nope")


class TestPartitioning:
    def test_prefix_restricts_first_row(self):
        full = list(enumerate_quandles(EnumerationTask(4)))
        restricted = list(
            enumerate_quandles(EnumerationTask(4, partition_prefix=(1, 3)))
        )
        expected = [q.rows for q in full if q.rows[0][:2] == (1, 3)]
        assert [q.rows for q in restricted] == expected

    def test_split_covers_search_space(self):
        subtasks = split_task(EnumerationTask(4), 3)
        merged = sorted(
            q.rows for t in subtasks for q in enumerate_quandles(t)
        )
        single = sorted(q.rows for q in enumerate_quandles(EnumerationTask(4)))
        assert merged == single

    def test_parallel_matches_serial_raw(self):
        serial = enumerate_parallel(EnumerationTask(4), 1)
        parallel = enumerate_parallel(EnumerationTask(4), 3)
        assert [q.rows for q in serial] == [q.rows for q in parallel]

    def test_parallel_matches_serial_iso(self):
        task = EnumerationTask(5, up_to_iso=True)
        serial = enumerate_parallel(task, 1)
        parallel = enumerate_parallel(task, 4)
        assert [q.rows for q in serial] == [q.rows for q in parallel]


class TestFalsify:
    def test_distinct_lengths_implies_latin_has_no_counterexample(self):
        assert falsify(("distinct-lengths", "latin"), 6) is None

    def test_unique_fixed_point_implies_latin_clean_at_small_orders(self):
        # known to fail at order 28, far beyond this search horizon
        assert falsify(("unique-fixed-point", "latin"), 5) is None

    def test_latin_does_not_imply_distinct_lengths(self):
        witness = falsify(("latin", "distinct-lengths"), 5)
        assert witness is not None
        assert witness.n == 5
        assert str(witness.profile()) == "(1,2^2)"
        assert are_isomorphic(witness, dihedral(5)) is not None

    def test_unknown_predicate(self):
        with pytest.raises(ValueError):
            falsify(("latin", "nope"), 3)
