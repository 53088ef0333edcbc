"""Path classes, graded sums, and highest-weight sets."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crystalpaths.combinatorics import kostka_number, partitions_of
from crystalpaths.crystal import ANTISYM, SYM, ClassicalWeight
from crystalpaths.energy import ground_state_energy
from crystalpaths.paths import (
    CLASSICAL,
    RESTRICTED,
    UNRESTRICTED,
    HwEntry,
    decompose,
    enumerate_paths,
    hw_set,
    hw_set_via_chains,
    iter_paths,
    onedsum,
    onedsum_table,
)
from crystalpaths.qalgebra import LaurentPoly

small_partitions = st.integers(1, 6).flatmap(
    lambda total: st.sampled_from(sorted(partitions_of(total))))


class TestEnumeration:
    def test_unrestricted_weight_space(self):
        # paths of shape mu and weight composition lam
        pairs = enumerate_paths(3, (2, 2, 1, 1), SYM, UNRESTRICTED, lam=(3, 2, 1))
        assert len(pairs) == 24
        for p, e in pairs:
            assert p.weight_composition() == (3, 2, 1)

    def test_classical_counts_are_kostka(self):
        for n in (2, 3):
            for size in (3, 4, 5):
                for mu in partitions_of(size):
                    for lam in partitions_of(size, max_len=n):
                        got = len(enumerate_paths(n, mu, SYM, CLASSICAL, lam=lam))
                        assert got == kostka_number(lam, mu), (n, mu, lam)

    def test_classes_nest(self):
        mu, lam = (2, 2, 1, 1), (3, 2, 1)
        u = {p for p, _ in enumerate_paths(3, mu, SYM, UNRESTRICTED, lam=lam)}
        c = {p for p, _ in enumerate_paths(3, mu, SYM, CLASSICAL, lam=lam)}
        r = {p for p, _ in enumerate_paths(3, mu, SYM, RESTRICTED, lam=lam, level=2)}
        assert r <= c <= u

    def test_restricted_needs_level(self):
        with pytest.raises(ValueError):
            enumerate_paths(3, (2, 1), SYM, RESTRICTED, lam=(2, 1))

    def test_antisym_enumeration(self):
        pairs = enumerate_paths(3, (2, 2, 2, 1), ANTISYM, UNRESTRICTED,
                                lam=(3, 2, 2))
        assert len(pairs) == 12

    def test_energies_sorted_with_paths(self):
        pairs = enumerate_paths(3, (2, 2, 1, 1), SYM, CLASSICAL, lam=(3, 2, 1))
        assert sorted(e for _, e in pairs) == [1, 2, 2, 3]

    def test_iter_matches_enumerate(self):
        listed = [p for p, _ in enumerate_paths(3, (2, 1, 1), SYM, CLASSICAL,
                                                lam=(2, 1, 1))]
        assert listed == list(iter_paths(3, (2, 1, 1), SYM, CLASSICAL,
                                         lam=(2, 1, 1)))


class TestOnedsum:
    def test_sym_example(self):
        poly = onedsum(3, (2, 2, 1, 1), SYM, UNRESTRICTED, lam=(3, 2, 1))
        assert str(poly) == "q+4q^2+6q^3+6q^4+4q^5+2q^6+q^7"

    def test_antisym_example(self):
        poly = onedsum(3, (2, 2, 2, 1), ANTISYM, UNRESTRICTED, lam=(3, 2, 2))
        assert str(poly) == "2+3q+4q^2+2q^3+q^4"

    def test_antisym_grading_is_negated(self):
        # antisymmetric sums grade by q^{-E}
        pairs = enumerate_paths(3, (2, 2, 2), ANTISYM, UNRESTRICTED, lam=(2, 2, 2))
        poly = onedsum(3, (2, 2, 2), ANTISYM, UNRESTRICTED, lam=(2, 2, 2))
        want = LaurentPoly.zero()
        for _, e in pairs:
            want = want + LaurentPoly.q(-e)
        assert poly == want

    def test_table_collects_all_weights(self):
        table = onedsum_table(3, (2, 1), SYM, UNRESTRICTED)
        total = sum(v(1) for v in table.values())
        assert total == comb(2 + 2, 2) * 3   # |B_2| * |B_1|
        assert all(len(k) == 3 for k in table)
        for key, poly in table.items():
            assert poly == onedsum(3, (2, 1), SYM, UNRESTRICTED, lam=key)

    @given(st.permutations([2, 1, 1]))
    @settings(max_examples=10, deadline=None)
    def test_weight_shuffle_invariance(self, lam):
        # graded count depends on the weight composition only through sorting
        base = onedsum(3, (2, 2), SYM, UNRESTRICTED, lam=(2, 1, 1))
        assert onedsum(3, (2, 2), SYM, UNRESTRICTED, lam=tuple(lam)) == base

    def test_classical_min_degree_is_ground_energy(self):
        for mu in partitions_of(5, max_len=3):
            poly = LaurentPoly.zero()
            for lam in partitions_of(5, max_len=3):
                poly = poly + onedsum(3, mu, SYM, CLASSICAL, lam=lam)
            assert poly.min_exp() == ground_state_energy(3, mu[0], 0, mu)


class TestHwSets:
    def test_worked_entries(self):
        hw = hw_set(3, 3, 1, (2, 1), SYM)
        got = sorted((e.path.word(), str(e.weight), e.energy) for e in hw)
        assert got == [("22,2", "3L2", 1), ("22,3", "L0+L1+L2", 0)]

    def test_entries_are_hashable_records(self):
        hw = hw_set(3, 2, 0, (2, 2), SYM)
        assert len(set(hw)) == len(hw)
        for e in hw:
            assert isinstance(e, HwEntry)
            assert e.weight.level() == 2
            assert e.weight.is_dominant()

    @pytest.mark.parametrize("n,level", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
    def test_chain_route_agrees(self, n, level):
        for r in range(n):
            for size in range(1, 6):
                for mu in partitions_of(size, max_part=level):
                    assert hw_set(n, level, r, mu, SYM) == \
                        hw_set_via_chains(n, level, r, mu), (n, level, r, mu)

    def test_restricted_class_counts_against_hw(self):
        # every restricted path appears in exactly one highest-weight fiber
        from crystalpaths.paths import restricted_partition_ok
        n, level, mu = 3, 2, (2, 1, 1)
        entries = hw_set(n, level, 0, mu, SYM)
        total = len(entries)
        by_class = 0
        for lam in partitions_of(sum(mu), max_len=n):
            if not restricted_partition_ok(lam, level, n):
                continue
            by_class += len(enumerate_paths(n, mu, SYM, RESTRICTED, lam=lam,
                                            level=level))
        assert by_class == total

    def test_decompose_shifts(self):
        rows = decompose(3, 3, 1, (2, 1), SYM)
        assert sorted((str(w), s) for w, s in rows) == \
            [("3L2", Fraction(-1)), ("L0+L1+L2", Fraction(0))]
        for w, s in rows:
            assert s <= 0
