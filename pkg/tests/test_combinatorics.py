"""Partitions, dominance, filters, tableaux, set partitions."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spechtgb import (
    PartitionFilter,
    Tableau,
    add_box,
    conjugate,
    derived_filter,
    dominates,
    enumerate_lower_filters,
    enumerate_upper_filters,
    filter_closure,
    filter_text,
    orbit_type,
    parse_filter_text,
    parse_partition_text,
    partition_text,
    partitions_of,
    permutation_sign,
    set_partition_type,
    set_partitions_of_type,
    tableaux,
    validate_partition,
    validate_set_partition,
)

from oracles import (
    brute_partitions,
    brute_permutation_sign,
    column_group_order,
    dominates_by_partial_sums,
    hook_length_count,
    set_partition_count,
    bell_number,
)

partitions_small = st.integers(1, 7).flatmap(
    lambda n: st.sampled_from(partitions_of(n))
)


class TestPartitions:
    def test_counts_match_brute_enumeration(self):
        # 1, 2, 3, 5, 7, 11, 15, 22, 30
        expected = [1, 2, 3, 5, 7, 11, 15, 22, 30]
        for n, count in zip(range(1, 10), expected):
            ps = partitions_of(n)
            assert len(ps) == count
            assert set(ps) == brute_partitions(n)

    def test_enumeration_order_is_dominance_compatible(self):
        # partitions_of lists in reverse lex, which refines dominance downward
        for n in range(1, 8):
            ps = partitions_of(n)
            for i, lam in enumerate(ps):
                for mu in ps[i + 1 :]:
                    assert not dominates(mu, lam) or mu == lam

    def test_validate_rejects_bad_input(self):
        with pytest.raises(ValueError):
            validate_partition([2, 3])
        with pytest.raises(ValueError):
            validate_partition([3, 0])
        with pytest.raises(ValueError):
            validate_partition([])
        with pytest.raises(ValueError):
            validate_partition([2, -1])

    def test_conjugate_small_cases(self):
        assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
        assert conjugate((1, 1, 1)) == (3,)
        assert conjugate((5,)) == (1, 1, 1, 1, 1)

    @given(partitions_small)
    def test_conjugate_is_an_involution(self, lam):
        assert conjugate(conjugate(lam)) == lam
        assert sum(conjugate(lam)) == sum(lam)

    def test_parse_text_roundtrip(self):
        for n in range(1, 8):
            for lam in partitions_of(n):
                assert parse_partition_text(partition_text(lam)) == lam
        assert parse_partition_text("411") == (4, 1, 1)
        assert parse_partition_text("[10,2]") == (10, 2)
        with pytest.raises(ValueError):
            parse_partition_text("[3,")


class TestDominance:
    def test_matches_partial_sum_reference(self):
        for n in range(1, 8):
            for a, b in itertools.product(partitions_of(n), repeat=2):
                assert dominates(a, b) == dominates_by_partial_sums(a, b)

    def test_incomparable_pairs_first_appear_at_six(self):
        for n in range(1, 6):
            for a, b in itertools.combinations(partitions_of(n), 2):
                assert dominates(a, b) or dominates(b, a)
        incomparable = [
            (a, b)
            for a, b in itertools.combinations(partitions_of(6), 2)
            if not dominates(a, b) and not dominates(b, a)
        ]
        assert incomparable == [
            ((4, 1, 1), (3, 3)),
            ((3, 1, 1, 1), (2, 2, 2)),
        ]

    def test_extremes(self):
        for n in range(1, 8):
            for lam in partitions_of(n):
                assert dominates((n,), lam)
                assert dominates(lam, (1,) * n)

    def test_conjugation_reverses_order(self):
        for n in range(1, 8):
            for a, b in itertools.product(partitions_of(n), repeat=2):
                assert dominates(a, b) == dominates(conjugate(b), conjugate(a))

    def test_rejects_mismatched_totals(self):
        with pytest.raises(ValueError):
            dominates((3,), (2, 2))


class TestAddBox:
    def test_row_cases(self):
        assert add_box((3, 1), 1) == (4, 1)
        assert add_box((3, 1), 2) == (3, 2)
        assert add_box((3, 1), 3) == (3, 1, 1)
        assert add_box((3, 1), 7) == (3, 1, 1)
        assert add_box((2, 2), 2) == (3, 2)  # resorted after the bump
        with pytest.raises(ValueError):
            add_box((3, 1), 0)

    @given(partitions_small, st.integers(1, 8))
    def test_result_is_a_partition_one_larger(self, lam, k):
        out = add_box(lam, k)
        assert validate_partition(out) == out
        assert sum(out) == sum(lam) + 1


class TestFilters:
    def test_constructor_validates_closure(self):
        PartitionFilter(4, [(1, 1, 1, 1), (2, 1, 1)], "lower")
        with pytest.raises(ValueError):
            PartitionFilter(4, [(2, 1, 1)], "lower")  # missing (1,1,1,1)
        with pytest.raises(ValueError):
            PartitionFilter(4, [(2, 1, 1)], "upper")  # missing everything above
        with pytest.raises(ValueError):
            PartitionFilter(4, [(2, 1)], "lower")  # wrong total

    def test_closure_generates_minimal_filter(self):
        f = filter_closure(6, [(4, 1, 1), (3, 3)], "upper")
        assert f.sorted_members() == (
            (6,),
            (5, 1),
            (4, 2),
            (4, 1, 1),
            (3, 3),
        )
        g = filter_closure(5, [(3, 2)], "lower")
        assert set(g.members) == {
            (3, 2),
            (3, 1, 1),
            (2, 2, 1),
            (2, 1, 1, 1),
            (1, 1, 1, 1, 1),
        }

    def test_enumeration_counts(self):
        # chain for n <= 5, genuine poset at 6
        assert [len(enumerate_lower_filters(n)) for n in range(2, 7)] == [
            2,
            3,
            5,
            7,
            13,
        ]
        assert len(enumerate_lower_filters(6, include_empty=True)) == 14

    def test_enumerated_filters_are_distinct_and_closed(self):
        for n in range(2, 7):
            filts = enumerate_lower_filters(n)
            assert len({f.members for f in filts}) == len(filts)
            for f in filts:
                for lam in f:
                    for mu in partitions_of(n):
                        if dominates(lam, mu):
                            assert mu in f

    def test_upper_filters_are_complements(self):
        for n in range(2, 7):
            lowers = enumerate_lower_filters(n, include_empty=True)
            uppers = enumerate_upper_filters(n, include_empty=True)
            assert len(lowers) == len(uppers)
            for f in lowers:
                c = f.complement()
                assert c.kind == "upper"
                assert c.complement() == f

    def test_derived_filter_worked_example(self):
        f = filter_closure(6, [(4, 1, 1), (3, 3)], "upper")
        assert set(derived_filter(f, 1).members) == {
            (5,),
            (4, 1),
            (3, 2),
            (3, 1, 1),
        }
        assert set(derived_filter(f, 2).members) == {(5,), (4, 1), (3, 2)}
        for k in (3, 4, 5, 9):
            assert set(derived_filter(f, k).members) == {(5,), (4, 1)}

    def test_derived_filter_preserves_kind_and_closure(self):
        for n in (4, 5, 6):
            for f in enumerate_upper_filters(n, include_empty=True):
                for k in range(1, n + 1):
                    d = derived_filter(f, k)
                    assert d.kind == "upper"
                    assert d.n == n - 1
        with pytest.raises(ValueError):
            derived_filter(PartitionFilter(1, [(1,)], "upper"), 1)

    def test_text_roundtrip(self):
        for n in range(2, 6):
            for f in enumerate_lower_filters(n):
                assert parse_filter_text(filter_text(f), n) == f
            for f in enumerate_upper_filters(n):
                assert parse_filter_text(filter_text(f), n) == f
        f = parse_filter_text("[2,1],[1,1,1]", 3)
        assert f.kind == "lower" and len(f) == 2
        with pytest.raises(ValueError):
            parse_filter_text("lower:[3]", 3)  # not closed downward


class TestTableaux:
    def test_validation(self):
        t = Tableau([[1, 2, 4], [3]])
        assert t.shape == (3, 1)
        assert t.n == 4
        with pytest.raises(ValueError):
            Tableau([[1, 2], [3, 4, 5]])  # rows not weakly decreasing
        with pytest.raises(ValueError):
            Tableau([[1, 2], [2]])  # repeated entry
        with pytest.raises(ValueError):
            Tableau([[1, 3]])  # not onto 1..n

    def test_columns_read_top_to_bottom(self):
        t = Tableau([[3, 2, 1, 7], [4, 5], [6]])
        assert t.columns() == ((3, 4, 6), (2, 5), (1,), (7,))
        assert t.row_index()[6] == 3
        assert not t.is_standard()
        assert Tableau([[1, 2], [3]]).is_standard()

    def test_mode_counts(self):
        from math import factorial

        for n in range(1, 7):
            for lam in partitions_of(n):
                assert len(tableaux(lam, "all")) == factorial(n)
                assert len(tableaux(lam, "standard")) == hook_length_count(lam)
                assert len(tableaux(lam, "column_standard")) == factorial(
                    n
                ) // column_group_order(lam)

    def test_modes_nest(self):
        for lam in [(2, 2), (3, 1, 1), (2, 2, 1)]:
            everything = set(tableaux(lam, "all"))
            colstd = set(tableaux(lam, "column_standard"))
            std = set(tableaux(lam, "standard"))
            assert std <= colstd <= everything
            assert all(t.is_column_standard() for t in colstd)
            assert all(t.is_standard() for t in std)

    def test_relabel_composes_with_sign(self):
        t = Tableau([[1, 3], [2]])
        u = t.relabel({1: 2, 2: 3, 3: 1})
        assert u.rows == ((2, 1), (3,))

    def test_permutation_sign_matches_inversion_count(self):
        for n in range(1, 6):
            for p in itertools.permutations(range(1, n + 1)):
                assert permutation_sign(p, n) == brute_permutation_sign(p)
        # dict form: a single transposition, fixed points spelled out
        assert permutation_sign({1: 2, 2: 1, 3: 3, 4: 4}, 4) == -1
        with pytest.raises(ValueError):
            permutation_sign({1: 2, 2: 1}, 4)


class TestOrbitsAndSetPartitions:
    def test_orbit_type_examples(self):
        assert orbit_type((4, 0, 2, 4, 2, 4)) == (3, 2, 1)
        assert orbit_type((7,)) == (1,)
        assert orbit_type((1, 1, 1)) == (3,)
        with pytest.raises(ValueError):
            orbit_type(())

    def test_type_counts_match_multinomial(self):
        for n in range(1, 7):
            total = 0
            for mu in partitions_of(n):
                parts = set_partitions_of_type(mu)
                assert len(parts) == set_partition_count(mu)
                assert len(set(parts)) == len(parts)
                for blocks in parts:
                    assert set_partition_type(blocks) == mu
                    assert validate_set_partition(blocks, n) == blocks
                total += len(parts)
            assert total == bell_number(n)

    def test_validate_canonicalizes(self):
        blocks = validate_set_partition([[3, 1], [2], [5, 4]], 5)
        assert blocks == ((1, 3), (4, 5), (2,))
        with pytest.raises(ValueError):
            validate_set_partition([[1, 2], [2, 3]], 3)
        with pytest.raises(ValueError):
            validate_set_partition([[1], []], 1)


@settings(max_examples=60)
@given(partitions_small, st.integers(1, 6))
def test_derived_filter_membership_definition(lam, k):
    n = sum(lam)
    f = filter_closure(n + 1, [add_box(lam, k)], "upper")
    assert lam in derived_filter(f, k)
