"""Local energy, the two global energy routes, and ground-state constants."""

import itertools
import random
from fractions import Fraction

import pytest

from crystalpaths.combinatorics import partitions_of
from crystalpaths.crystal import ANTISYM, SYM, CrystalElement, Path, path_from_words
from crystalpaths.energy import (
    energy,
    energy_elines,
    energy_lines,
    energy_parts,
    energy_table,
    ground_state_energy,
    ground_state_path,
    local_energy,
    local_energy_iso,
)


def sym_pairs(n, d1, d2):
    from crystalpaths.crystal import crystal_elements
    return itertools.product(crystal_elements(n, SYM, d1),
                             crystal_elements(n, SYM, d2))


class TestLocalEnergy:
    def test_iso_is_weight_preserving_bijection(self):
        for n in (2, 3):
            for d1 in (1, 2, 3):
                for d2 in range(1, d1 + 1):
                    seen = set()
                    for b1, b2 in sym_pairs(n, d1, d2):
                        h, (c2, c1) = local_energy_iso(b1, b2)
                        assert c2.degree() == d2 and c1.degree() == d1
                        assert [x + y for x, y in zip(b1.coords, b2.coords)] == \
                            [x + y for x, y in zip(c1.coords, c2.coords)]
                        assert isinstance(h, int) and h >= 0
                        seen.add((c2, c1))
                    # injective on the full product, hence a bijection
                    from math import comb
                    assert len(seen) == comb(d1 + n - 1, n - 1) * comb(d2 + n - 1, n - 1)

    def test_iso_fixes_equal_degrees(self):
        # on equal degrees the unique crystal map is the identity
        for n in (2, 3):
            for b1, b2 in sym_pairs(n, 2, 2):
                h, (c2, c1) = local_energy_iso(b1, b2)
                assert (c2, c1) == (b1, b2)

    def test_iso_commutes_with_operators(self):
        # the swap is a map of crystals: it commutes with every e_i and f_i
        n = 3
        for b1, b2 in sym_pairs(n, 3, 2):
            p = Path((b1, b2))
            _, (c2, c1) = local_energy_iso(b1, b2)
            q = Path((c2, c1))
            for i in range(n):
                fp, fq = p.f(i), q.f(i)
                assert (fp is None) == (fq is None)
                if fp is not None:
                    _, (d2, d1) = local_energy_iso(fp[0], fp[1])
                    assert (fq[0], fq[1]) == (d2, d1)

    def test_degree_order_is_enforced(self):
        b1 = CrystalElement(3, SYM, (1, 0, 0))
        b2 = CrystalElement(3, SYM, (2, 0, 0))
        with pytest.raises(ValueError):
            local_energy_iso(b1, b2)

    def test_local_energy_values(self):
        # winding count for the worked two-column pair
        b1 = CrystalElement(3, SYM, (1, 0, 2))
        b2 = CrystalElement(3, SYM, (0, 2, 0))
        assert local_energy(b1, b2) == 1


class TestGlobalEnergy:
    def test_worked_example(self):
        p = Path([CrystalElement(3, SYM, c)
                  for c in ((1, 0, 2), (0, 2, 0), (0, 1, 1), (0, 1, 0))])
        assert energy(p) == 4
        assert energy_parts(p) == (0, 1, 2, 1)
        assert energy_elines(p) == 4

    def test_parts_start_at_zero_and_sum(self):
        for words in (("11", "22", "3", "1"), ("22", "13", "2"), ("3", "2", "1")):
            p = path_from_words(words, 3)
            parts = energy_parts(p)
            assert parts[0] == 0
            assert sum(parts) == energy(p)

    def test_table_upper_triangular(self):
        p = path_from_words(("11", "22", "3", "1"), 3)
        table = energy_table(p)
        assert set(table) == {(i, j) for i in range(1, 5) for j in range(i + 1, 5)}

    def test_antisym_examples(self):
        q1 = path_from_words(("12", "12", "13", "3"), 3, ANTISYM)
        q2 = path_from_words(("12", "13", "23", "1"), 3, ANTISYM)
        assert energy(q1) == -2
        assert energy(q2) == -4
        assert energy_elines(q1) == -2
        assert energy_elines(q2) == -4

    def test_two_routes_agree_on_random_paths(self):
        rng = random.Random(11)
        from crystalpaths.crystal import crystal_elements
        for n, kind in ((2, SYM), (3, SYM), (3, ANTISYM), (4, ANTISYM)):
            dmax = 4 if kind == SYM else n - 1
            for _ in range(60):
                m = rng.randint(2, 4)
                degs = sorted((rng.randint(1, dmax) for _ in range(m)),
                              reverse=True)
                comps = []
                for d in degs:
                    pool = crystal_elements(n, kind, d)
                    comps.append(rng.choice(pool))
                p = Path(comps)
                assert energy(p) == energy_elines(p), p.word()

    def test_lines_partition_all_dots(self):
        # start dots plus visited dots exhaust the diagram
        for words in (("11", "22", "3", "1"), ("22", "13", "2", "1")):
            p = path_from_words(words, 3)
            lines = energy_lines(p)
            steps = sum(len(s) for _, s in lines)
            total_dots = sum(sum(b.coords) for b in p.components)
            assert steps + len(lines) == total_dots
            # a winding step into column c on a line from column s counts s-c
            winds = sum(start - col
                        for start, s in lines for col, _, w in s if w)
            assert winds == energy(p)

    def test_shape_must_weakly_decrease(self):
        p = path_from_words(("1", "22"), 3)
        with pytest.raises(ValueError):
            energy_parts(p)


class TestGroundStates:
    def test_ground_state_path_shape(self):
        p = ground_state_path(3, (2, 2, 1, 1))
        assert p.shape() == (2, 2, 1, 1)
        assert energy(p) == ground_state_energy(3, 2, 0, (2, 2, 1, 1))

    def test_ground_state_is_minimal(self):
        from crystalpaths.crystal import crystal_elements
        for n in (2, 3):
            for size in range(2, 6):
                for mu in partitions_of(size, max_len=3):
                    if len(mu) < 2:
                        continue
                    factors = [crystal_elements(n, SYM, d) for d in mu]
                    emin = min(energy(Path(c)) for c in itertools.product(*factors))
                    assert emin == ground_state_energy(n, mu[0], 0, mu), (n, mu)

    def test_rectangle_closed_form(self):
        for n in (2, 3, 4):
            for t in (1, 2):
                for count in (n, 2 * n, 3 * n):
                    got = ground_state_energy(n, t, 0, (t,) * count)
                    assert got == Fraction(t * count * (count - n), 2 * n)

    def test_frozen_values(self):
        assert ground_state_energy(3, 2, 0, (2, 2, 1, 1)) == 1
        assert ground_state_energy(3, 3, 1, (2, 1)) == 0
        assert ground_state_energy(2, 1, 0, ()) == 0

    def test_rejects_bad_shape(self):
        with pytest.raises(ValueError):
            ground_state_energy(3, 1, 0, (2, 1))
        with pytest.raises(ValueError):
            ground_state_energy(3, 2, 0, (1, 2))
