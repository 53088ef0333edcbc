"""Row/column crystal elements, operators, weights, and tensor paths."""

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crystalpaths.crystal import (
    ANTISYM,
    SYM,
    ClassicalWeight,
    CrystalElement,
    Path,
    crystal_elements,
    element_from_word,
    path_from_words,
)


def all_elements(n, kind, dmax):
    for d in range(dmax + 1):
        if kind == ANTISYM and not 0 < d < n:
            continue
        yield from crystal_elements(n, kind, d)


class TestElements:
    def test_word_roundtrip(self):
        b = element_from_word("1123", 4)
        assert b.coords == (2, 1, 1, 0)
        assert b.word() == "1123"
        c = element_from_word("13", 3, ANTISYM)
        assert c.coords == (1, 0, 1)
        assert c.word() == "13"

    def test_sizes(self):
        for n in (2, 3, 4):
            for d in range(5):
                assert len(list(crystal_elements(n, SYM, d))) == comb(d + n - 1, n - 1)
            for d in range(1, n):
                assert len(list(crystal_elements(n, ANTISYM, d))) == comb(n, d)

    def test_antisym_bounds(self):
        assert crystal_elements(3, ANTISYM, 3) == []
        with pytest.raises(ValueError):
            CrystalElement(3, ANTISYM, (1, 1, 1))
        with pytest.raises(ValueError):
            CrystalElement(3, ANTISYM, (2, 0, 0))

    @pytest.mark.parametrize("kind", [SYM, ANTISYM])
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_operators_invert(self, n, kind):
        for b in all_elements(n, kind, 4 if kind == SYM else n - 1):
            for i in range(n):
                fb = b.f(i)
                if fb is not None:
                    assert fb.e(i) == b
                eb = b.e(i)
                if eb is not None:
                    assert eb.f(i) == b

    @pytest.mark.parametrize("kind", [SYM, ANTISYM])
    @pytest.mark.parametrize("n", [2, 3])
    def test_string_statistics(self, n, kind):
        # epsilon/phi count how many times e/f apply, and their difference
        # is the pairing of the weight with the coroot
        for b in all_elements(n, kind, 4 if kind == SYM else n - 1):
            for i in range(n):
                k, cur = 0, b
                while cur.e(i) is not None:
                    cur, k = cur.e(i), k + 1
                assert k == b.epsilon(i)
                k, cur = 0, b
                while cur.f(i) is not None:
                    cur, k = cur.f(i), k + 1
                assert k == b.phi(i)
                assert b.phi(i) - b.epsilon(i) == (
                    b.coords[i - 1] - b.coords[i % n])

    def test_zero_arrow_sym(self):
        b = CrystalElement(3, SYM, (1, 0, 2))
        assert b.f(0).coords == (2, 0, 1)
        assert b.e(0).coords == (0, 0, 3)
        assert b.epsilon(0) == 1 and b.phi(0) == 2

    def test_zero_arrow_antisym(self):
        b = CrystalElement(3, ANTISYM, (0, 1, 1))
        # slot pair is (letter n, letter 1)
        assert b.phi(0) == 1
        assert b.f(0).coords == (1, 1, 0)
        assert b.e(0) is None

    def test_weight(self):
        b = CrystalElement(3, SYM, (1, 0, 2))
        w = b.weight()
        assert [w.pair(i) for i in range(3)] == [b.coords[-1] - b.coords[0],
                                                 b.coords[0] - b.coords[1],
                                                 b.coords[1] - b.coords[2]]


class TestClassicalWeight:
    def test_fundamental_and_level(self):
        w = ClassicalWeight.fundamental(3, 1, 2)
        assert w.level() == 2
        assert str(w) == "2L1"
        assert (w + ClassicalWeight.fundamental(3, 0)).level() == 3

    def test_pair_and_dominance(self):
        w = ClassicalWeight.fundamental(4, 2)
        assert w.pair(2) == 1
        assert all(w.pair(i) == 0 for i in (0, 1, 3))
        assert w.is_dominant()
        assert not (w - ClassicalWeight.fundamental(4, 1, 2)).is_dominant()

    def test_equality_and_hash(self):
        a = ClassicalWeight.fundamental(3, 1) + ClassicalWeight.fundamental(3, 2)
        b = ClassicalWeight.fundamental(3, 2) + ClassicalWeight.fundamental(3, 1)
        assert a == b and hash(a) == hash(b)


class TestPaths:
    def test_construction_and_shape(self):
        p = path_from_words(("11", "22", "3", "1"), 3)
        assert p.shape() == (2, 2, 1, 1)
        assert len(p) == 4
        assert p.word() == "11,22,3,1"
        assert p[0].coords == (2, 0, 0)

    def test_weight_additivity(self):
        p = path_from_words(("11", "22", "3", "1"), 3)
        total = ClassicalWeight.fundamental(3, 0, 0)
        for b in p.components:
            total = total + b.weight()
        assert p.weight() == total
        assert p.weight_composition() == (3, 2, 1)

    def test_json_roundtrip(self):
        p = path_from_words(("12", "13", "23", "1"), 3, ANTISYM)
        assert Path.from_json(p.to_json()) == p

    @pytest.mark.parametrize("kind,words", [
        (SYM, ("11", "22", "3", "1")),
        (SYM, ("123", "22")),
        (ANTISYM, ("12", "13", "23", "1")),
    ])
    def test_tensor_operators_invert(self, kind, words):
        p = path_from_words(words, 3, kind)
        for i in range(3):
            fp = p.f(i)
            if fp is not None:
                assert fp.e(i) == p
            ep = p.e(i)
            if ep is not None:
                assert ep.f(i) == p

    @pytest.mark.parametrize("kind", [SYM, ANTISYM])
    def test_tensor_string_statistics(self, kind):
        # the rank-2 statistics computed through the tensor rule agree with
        # brute-force string lengths
        n = 3
        source = {SYM: ("1", "12", "22"), ANTISYM: ("1", "12", "13")}[kind]
        import itertools
        for pair in itertools.product(source, repeat=2):
            p = path_from_words(pair, n, kind)
            for i in range(n):
                k, cur = 0, p
                while cur.e(i) is not None:
                    cur, k = cur.e(i), k + 1
                assert k == p.epsilon(i), (pair, i)
                k, cur = 0, p
                while cur.f(i) is not None:
                    cur, k = cur.f(i), k + 1
                assert k == p.phi(i), (pair, i)

    def test_operator_changes_one_slot(self):
        p = path_from_words(("11", "22", "3", "1"), 3)
        for i in range(3):
            fp = p.f(i)
            if fp is None:
                continue
            changed = [k for k in range(len(p))
                       if fp[k] != p[k]]
            assert len(changed) == 1
