"""Partitions, tableaux, charge, and the two Kostka routes."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crystalpaths.combinatorics import (
    Tableau,
    as_partition,
    charge,
    charge_word,
    conjugate,
    enumerate_ssyt,
    is_horizontal_strip,
    iter_compositions,
    kostka_foulkes,
    kostka_number,
    n_stat,
    part,
    partitions_of,
    plus_op,
    union_op,
)
from crystalpaths.qalgebra import LaurentPoly

partition_lists = st.lists(st.integers(1, 6), max_size=5).map(
    lambda xs: tuple(sorted(xs, reverse=True)))


def test_as_partition_cleans_input():
    assert as_partition([3, 2, 0, 0]) == (3, 2)
    assert as_partition(()) == ()
    with pytest.raises(ValueError):
        as_partition((1, 2))


def test_part_is_one_based_and_padded():
    lam = (4, 2, 1)
    assert part(lam, 1) == 4
    assert part(lam, 3) == 1
    assert part(lam, 9) == 0


@given(partition_lists)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    # row count of the conjugate is the largest part
    assert len(conjugate(lam)) == (lam[0] if lam else 0)


def test_conjugate_values():
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate(()) == ()


@given(partition_lists, partition_lists)
def test_union_and_plus(lam, mu):
    u = union_op(lam, mu)
    s = plus_op(lam, mu)
    assert sum(u) == sum(lam) + sum(mu)
    assert sum(s) == sum(lam) + sum(mu)
    # union sorts the parts together; plus adds rows pointwise
    assert u == tuple(sorted(lam + mu, reverse=True))
    assert conjugate(s) == union_op(conjugate(lam), conjugate(mu))


def test_n_stat():
    # sum of (i-1) * lam_i
    assert n_stat(()) == 0
    assert n_stat((3, 2, 1)) == 0 * 3 + 1 * 2 + 2 * 1


def test_horizontal_strips():
    assert is_horizontal_strip((2, 1), (3, 2))
    assert is_horizontal_strip((2,), (2,))
    assert not is_horizontal_strip((2, 1), (4, 3))   # second row pokes above
    assert not is_horizontal_strip((3, 2), (2, 2))   # not containing
    assert not is_horizontal_strip((1,), (2, 2))


def test_partition_counts():
    # p(0..10)
    want = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for k, p in enumerate(want):
        assert len(list(partitions_of(k))) == p
    assert list(partitions_of(4, max_part=2)) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions_of(4, max_len=2)) == [(4,), (3, 1), (2, 2)]


@given(st.integers(0, 9), st.integers(1, 5))
def test_partition_bounds_conjugate_duality(total, bound):
    by_part = set(partitions_of(total, max_part=bound))
    by_len = set(partitions_of(total, max_len=bound))
    assert {conjugate(lam) for lam in by_part} == by_len


def test_iter_compositions():
    comps = list(iter_compositions(3, 2))
    assert sorted(comps) == [(0, 3), (1, 2), (2, 1), (3, 0)]
    assert list(iter_compositions(0, 3)) == [(0, 0, 0)]


class TestTableaux:
    def test_shape_weight_word(self):
        t = Tableau(((1, 1, 2), (2, 3)))
        assert t.shape() == (3, 2)
        assert t.weight() == (2, 2, 1)
        # word reads rows bottom to top
        assert t.word() == (2, 3, 1, 1, 2)

    def test_enumerate_counts_match_kostka(self):
        for shape in partitions_of(5):
            for weight in partitions_of(5):
                tabs = enumerate_ssyt(shape, weight)
                assert len(tabs) == kostka_number(shape, weight)
                for t in tabs:
                    assert t.shape() == shape
                    assert t.weight() == weight

    def test_enumerate_rejects_size_mismatch(self):
        assert enumerate_ssyt((2, 1), (2, 2)) == []


class TestCharge:
    def test_standard_word(self):
        # forced by K_{(3),(1^3)} = q^3 and K_{(1^3),(1^3)} = 1
        assert charge_word((1, 2, 3)) == 3
        assert charge_word((3, 2, 1)) == 0

    def test_charge_of_tableau(self):
        t = Tableau(((1, 1, 2), (2, 3)))
        assert charge(t) == charge_word(t.word())

    @pytest.mark.parametrize("shape,weight,expect", [
        ((2, 1), (1, 1, 1), {1: 1, 2: 1}),
        ((3, 2, 1), (2, 2, 1, 1), {1: 1, 2: 2, 3: 1}),
        ((4, 2), (2, 2, 1, 1), {3: 2, 4: 1, 5: 1}),
        ((2, 2), (2, 1, 1), {1: 1}),
    ])
    def test_kostka_foulkes_values(self, shape, weight, expect):
        assert kostka_foulkes(shape, weight) == LaurentPoly(expect)

    def test_kostka_foulkes_specializes_to_kostka(self):
        for shape in partitions_of(6, max_len=4):
            for weight in partitions_of(6):
                kf = kostka_foulkes(shape, weight)
                assert kf(1) == kostka_number(shape, weight)

    def test_diagonal_is_one(self):
        for lam in partitions_of(6):
            assert kostka_foulkes(lam, lam) == 1

    def test_dominance_vanishing(self):
        # K vanishes unless shape dominates weight
        assert kostka_foulkes((2, 2), (3, 1)).is_zero()
        assert kostka_number((1, 1, 1), (2, 1)) == 0

    @given(st.permutations([2, 2, 1, 1]))
    @settings(max_examples=12, deadline=None)
    def test_kostka_number_weight_reordering(self, w):
        # counts of SSYT depend on the weight only through its sorted parts
        shape = (3, 2, 1)
        assert len(enumerate_ssyt(shape, tuple(w))) == kostka_number(shape, (2, 2, 1, 1))
