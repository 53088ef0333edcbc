"""Configuration sums and the q-series built from them."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crystalpaths.combinatorics import kostka_foulkes, partitions_of
from crystalpaths.crystal import ANTISYM, SYM
from crystalpaths.fermionic import (
    CartanDatum,
    cartan_inverse_entry,
    cartan_matrix,
    ff_kostka,
    ff_kostka_dual,
    ff_restricted_branch_dual,
    ff_restricted_rect,
    ff_restricted_rect_dual,
    ff_unrestricted_antisym,
    ff_unrestricted_sym,
    general_string_series,
    is_positive_definite,
    rsos_spinon_series,
    spinon_branching_series,
    string_series_single,
    string_series_tensor,
    twisted_branching_series,
)
from crystalpaths.paths import CLASSICAL, UNRESTRICTED, onedsum
from crystalpaths.qalgebra import LaurentPoly, QSeries, inv_qpochhammer_series


class TestCartanData:
    def test_matrix(self):
        assert cartan_matrix(2) == [[2, -1], [-1, 2]]
        assert cartan_matrix(1) == [[2]]

    def test_inverse_entry(self):
        # cartan_inverse_entry(k, ., .) inverts the rank k-1 matrix and
        # vanishes on the boundary indices 0 and k
        for k in (2, 3, 4):
            c = cartan_matrix(k - 1)
            for i in range(1, k):
                for j in range(1, k):
                    got = sum(Fraction(c[i - 1][m - 1])
                              * cartan_inverse_entry(k, m, j)
                              for m in range(1, k))
                    assert got == (1 if i == j else 0)
            assert cartan_inverse_entry(k, 0, 1) == 0
            assert cartan_inverse_entry(k, k, 1) == 0

    def test_positive_definite(self):
        assert is_positive_definite([[Fraction(2), Fraction(-1)],
                                     [Fraction(-1), Fraction(2)]])
        assert not is_positive_definite([[Fraction(1), Fraction(2)],
                                         [Fraction(2), Fraction(1)]])


class TestConfigurationSums:
    def test_sym_route_matches_paths(self):
        for n in (2, 3):
            for size in (3, 4, 5):
                for mu in partitions_of(size):
                    for lam in partitions_of(size, max_len=n):
                        want = onedsum(n, mu, SYM, UNRESTRICTED, lam=lam)
                        assert ff_unrestricted_sym(n, lam, mu) == want, (n, mu, lam)

    def test_antisym_route_matches_paths(self):
        for n in (2, 3):
            for size in (3, 4):
                for mu in partitions_of(size, max_part=n - 1):
                    for lam in partitions_of(size, max_len=n):
                        want = onedsum(n, mu, ANTISYM, UNRESTRICTED, lam=lam)
                        assert ff_unrestricted_antisym(n, lam, mu) == want

    def test_kostka_route_matches_charge(self):
        for n in (2, 3):
            for size in (4, 5, 6):
                for mu in partitions_of(size):
                    for lam in partitions_of(size, max_len=n):
                        assert ff_kostka(n, lam, mu) == kostka_foulkes(lam, mu)

    def test_kostka_dual_matches_charge(self):
        # same polynomial, assembled from column data
        for n in (2, 3):
            for size in (3, 4, 5):
                for eta in partitions_of(size, max_part=n - 1):
                    for xi in partitions_of(size, max_part=n):
                        got = ff_kostka_dual(n, xi, eta)
                        want = kostka_foulkes(xi, eta)
                        assert got == want, (n, xi, eta)

    def test_frozen_restricted_values(self):
        assert str(ff_restricted_rect(2, 2, (2, 2, 1, 1))) == "q^2"
        assert str(ff_restricted_rect(2, 2, (1, 1))) == "1"
        assert str(ff_restricted_rect_dual(2, 1, (1, 1))) == "q"

    def test_restricted_saturates_to_kostka(self):
        # once the level clears the shape size the cutoff is invisible
        for n in (2, 3):
            for size in (n, 2 * n):
                for mu in partitions_of(size):
                    high = ff_restricted_rect(n, size + 1, mu)
                    lam = ((size // n),) * n
                    assert high == ff_kostka(n, lam, mu)

    def test_branch_dual_worked_value(self):
        got = ff_restricted_branch_dual(3, 3, 1, (2, 2, 1, 1), (2, 1))
        assert str(got) == "q+3q^2+q^3"

    def test_domain_checks(self):
        with pytest.raises(ValueError):
            ff_kostka(2, (1, 1, 1), (1, 1, 1))       # too many rows
        with pytest.raises(ValueError):
            ff_restricted_rect(2, 1, (2, 1, 1))      # part above the level
        with pytest.raises(ValueError):
            ff_restricted_rect(2, 2, (2, 1))         # size not divisible by n

    @given(st.integers(2, 3), st.integers(2, 6))
    @settings(max_examples=15, deadline=None)
    def test_sym_sum_nonnegative(self, n, size):
        for mu in partitions_of(size):
            for lam in partitions_of(size, max_len=n):
                poly = ff_unrestricted_sym(n, lam, mu)
                assert all(c > 0 for _, c in poly.sorted_terms())


class TestSeries:
    def test_string_vacuum_rank1_level1(self):
        # level-1 vacuum string series counts plain partitions
        s = string_series_single(2, 1, 0, (), (), 8)
        assert s == inv_qpochhammer_series(8, 8)

    def test_string_accepts_attached_shape(self):
        s = string_series_single(2, 2, 1, (1,), (1,), 6)
        assert s.coeff(0) >= 0
        assert s.order == 6

    def test_tensor_two_blocks(self):
        s = string_series_tensor(2, [(1, 0), (1, 0)], (), 6)
        t = string_series_tensor(2, [(1, 0), (1, 0)], (2,), 6)
        assert not s.is_zero() and not t.is_zero()
        assert s != t

    def test_spinon_domain(self):
        with pytest.raises(ValueError):
            spinon_branching_series(3, 1, (1,), 4)       # size not 0 mod n
        with pytest.raises(ValueError):
            spinon_branching_series(2, 1, (2, 2), 4)     # too many rows

    def test_spinon_vacuum_normalizes_to_one(self):
        s = spinon_branching_series(2, 1, (), 6)
        assert s.coeff(0) == 1

    def test_rsos_frozen(self):
        s = rsos_spinon_series(2, 2, 1, 5)
        assert [s.coeff(k) for k in range(6)] == [1, 0, 1, 1, 2, 2]

    def test_twisted_reduces_to_spinon(self):
        # with no twist the two branching series coincide
        a = twisted_branching_series(2, 2, 0, (), (), 6)
        b = spinon_branching_series(2, 2, (), 6)
        assert a.matches(b)
        assert a.coeff(0) == 1

    def test_general_matches_single_for_type_a(self):
        datum = CartanDatum.simply_laced_a(2)
        got = general_string_series(datum, [1], (0, 0), 5)
        want = string_series_single(3, 1, 0, (), (), 5)
        assert got.matches(want)

    def test_simply_laced_equals_from_cartan(self):
        a = CartanDatum.simply_laced_a(3)
        b = CartanDatum.from_cartan(cartan_matrix(3), [1, 1, 1])
        assert a.inner == b.inner and a.t == b.t
