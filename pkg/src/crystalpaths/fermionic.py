"""Fermionic evaluators: positive-sum formulas for 1d sums and their limits.

Two shapes of object live here.

Polynomial evaluators return LaurentPoly values computed as sums over
finitely many "configurations" (chains of Young diagrams, or integer
multiplicity vectors m^(a)_i indexed by a color a and a label i), each
contributing q^{quadratic exponent} times a product of q-binomials.
Vacancy numbers must be nonnegative; a q-binomial with a negative or
oversized lower argument is zero by convention.

Series evaluators return QSeries truncations of the corresponding
infinite sums.  Each is a constrained sum of q^{C(m)} / prod (q)_{m}
over integer vectors; C is a positive definite quadratic form plus a
linear part, so every contribution up to the truncation order lies in
an explicit ellipsoid.  Enumeration runs over the ellipsoid's exact
integer bounding box (rational arithmetic throughout), then once more
over a box enlarged by half; the audit pass must find nothing new.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .combinatorics import (
    as_partition,
    conjugate,
    n_stat,
    part,
    partitions_of,
)
from .qalgebra import (
    LaurentPoly,
    QSeries,
    inv_pochhammer_series,
    inv_qpochhammer_series,
    qbinomial,
)

# ---------------------------------------------------------------------------
# Cartan helpers


def cartan_matrix(rank: int) -> list:
    """Cartan matrix of the simply laced chain of the given rank."""
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    return [
        [2 if a == b else (-1 if abs(a - b) == 1 else 0) for b in range(rank)]
        for a in range(rank)
    ]


def cartan_inverse_entry(k: int, i: int, j: int) -> Fraction:
    """(i,j) entry of the inverse Cartan matrix of rank k-1.

    Equals min(i,j) - ij/k for 1 <= i,j <= k-1 and vanishes when either
    index is 0 or k; indices outside [0,k] are rejected.
    """
    if not (0 <= i <= k and 0 <= j <= k):
        raise ValueError(f"index out of range for rank {k - 1}: ({i},{j})")
    if i in (0, k) or j in (0, k):
        return Fraction(0)
    return Fraction(min(i, j)) - Fraction(i * j, k)


def _cartan_entry(a: int, b: int) -> int:
    return 2 if a == b else (-1 if abs(a - b) == 1 else 0)


# ---------------------------------------------------------------------------
# configuration generators


def _weighted_vectors(total: int, max_label: int) -> Iterator[tuple]:
    """Vectors (m_1..m_max_label) >= 0 with sum i*m_i = total."""
    if total < 0:
        return
    if max_label == 0:
        if total == 0:
            yield ()
        return

    def rec(label: int, remaining: int, acc: list) -> Iterator[tuple]:
        if label == max_label:
            if remaining % label == 0:
                yield tuple(acc + [remaining // label])
            return
        for count in range(remaining // label + 1):
            acc.append(count)
            yield from rec(label + 1, remaining - label * count, acc)
            acc.pop()

    yield from rec(1, total, [])


def _min_sum(vec: Sequence[int], i: int) -> int:
    """Sum_k min(i,k) * vec_{k-1}."""
    return sum(min(i, k) * v for k, v in enumerate(vec, start=1))


def _pair_quadratic(config: Sequence[tuple]) -> Fraction:
    """(1/2) sum_{a,b} C_ab sum_{j,k} min(j,k) m^(a)_j m^(b)_k."""
    n1 = len(config)
    quad = 0
    for a in range(n1):
        va = config[a]
        for b in range(n1):
            cab = _cartan_entry(a, b)
            if not cab:
                continue
            vb = config[b]
            acc = 0
            for j in range(1, len(va) + 1):
                if va[j - 1]:
                    acc += va[j - 1] * _min_sum(vb, j)
            quad += cab * acc
    return Fraction(quad, 2)


def _chains_between(upper: tuple, sizes: Sequence[int], strips: bool) -> Iterator[list]:
    """Chains () = k0 <= k1 <= ... <= k_s = upper with |k_a| - |k_{a-1}|
    = sizes[a-1]; each step a horizontal strip when strips is set."""
    rows = len(upper)

    def between(prev: tuple, size: int) -> Iterator[tuple]:
        prev_full = [part(prev, i) for i in range(1, rows + 1)]
        up_full = [part(upper, i) for i in range(1, rows + 1)]

        def rec(i: int, remaining: int, acc: list) -> Iterator[tuple]:
            if i > rows:
                if remaining == 0:
                    yield tuple(x for x in acc if x)
                return
            lo = prev_full[i - 1]
            hi = min(up_full[i - 1], lo + remaining)
            if i >= 2:
                hi = min(hi, acc[i - 2])
                if strips:
                    hi = min(hi, prev_full[i - 2])
            for v in range(hi, lo - 1, -1):
                acc.append(v)
                yield from rec(i + 1, remaining - (v - lo), acc)
                acc.pop()

        yield from rec(1, size, [])

    def walk(chain: list, a: int) -> Iterator[list]:
        if a == len(sizes):
            if chain[-1] == upper:
                yield list(chain)
            return
        for nxt in between(chain[-1], sizes[a]):
            chain.append(nxt)
            yield from walk(chain, a + 1)
            chain.pop()

    yield from walk([()], 0)


# ---------------------------------------------------------------------------
# polynomial evaluators: diagram-chain forms


def _check_weight(n: int, lam: Sequence[int], size: int) -> tuple:
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam):
        raise ValueError("weight entries must be nonnegative")
    if len(lam) > n and any(lam[n:]):
        raise ValueError(f"weight has more than n={n} slots")
    lam = (lam + (0,) * n)[:n]
    if sum(lam) != size:
        raise ValueError("weight and shape sizes differ")
    return lam


def ff_unrestricted_sym(n: int, lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
    """Chain form of the unrestricted one-dimensional sum, row shapes.

    Sums over chains of diagrams from the empty one to the conjugate of
    mu whose a-th member has lam_1+...+lam_a cells; the exponent counts
    cell pairs within each row of each successive difference.
    """
    mu = as_partition(mu)
    lam = _check_weight(n, lam, sum(mu))
    muc = conjugate(mu)
    depth = part(mu, 1)
    total = LaurentPoly.zero()
    for chain in _chains_between(muc, lam, strips=False):
        phi = 0
        for a in range(n):
            for i in range(1, depth + 1):
                d = part(chain[a + 1], i) - part(chain[a], i)
                phi += d * (d - 1) // 2
        contrib = LaurentPoly.q(phi)
        for a in range(1, n):
            for i in range(1, depth + 1):
                top = part(chain[a + 1], i) - part(chain[a], i + 1)
                bot = part(chain[a], i) - part(chain[a], i + 1)
                contrib = contrib * qbinomial(top, bot)
                if contrib.is_zero():
                    break
            if contrib.is_zero():
                break
        total = total + contrib
    return total


def ff_unrestricted_antisym(
    n: int, lam: Sequence[int], mu: Sequence[int]
) -> LaurentPoly:
    """Chain form of the unrestricted one-dimensional sum, column shapes.

    Same chain endpoints, but the steps are horizontal strips and no
    exponent is attached; the q-binomials pair consecutive rows of each
    chain member against the next one.
    """
    mu = as_partition(mu)
    if mu and mu[0] > n - 1:
        raise ValueError("column shapes need parts < n")
    lam = _check_weight(n, lam, sum(mu))
    muc = conjugate(mu)
    depth = part(mu, 1)
    total = LaurentPoly.zero()
    for chain in _chains_between(muc, lam, strips=True):
        contrib = LaurentPoly.one()
        for a in range(1, n):
            nxt, cur = chain[a + 1], chain[a]
            for i in range(1, depth + 1):
                top = part(nxt, i) - part(nxt, i + 1)
                bot = part(cur, i) - part(nxt, i + 1)
                contrib = contrib * qbinomial(top, bot)
                if contrib.is_zero():
                    break
            if contrib.is_zero():
                break
        total = total + contrib
    return total


# ---------------------------------------------------------------------------
# polynomial evaluators: multiplicity-vector forms


def _binomial_product(pairs: Sequence[tuple]) -> LaurentPoly:
    out = LaurentPoly.one()
    for top, bot in pairs:
        out = out * qbinomial(top, bot)
        if out.is_zero():
            return out
    return out


def ff_kostka(n: int, lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
    """Multiplicity-vector form of the Kostka-Foulkes polynomial.

    Configurations are colored vectors m^(a) (a = 1..n-1) with
    sum_i i*m^(a)_i = lam_{a+1}+...+lam_n; vacancy numbers must stay
    nonnegative up to the saturation label max(mu_1, largest label).
    """
    lam = as_partition(lam)
    mu = as_partition(mu)
    if len(lam) > n:
        raise ValueError(f"weight partition deeper than n={n}")
    if sum(lam) != sum(mu):
        raise ValueError("sizes differ")
    lam_full = [part(lam, a) for a in range(1, n + 1)]
    totals = [sum(lam_full[a:]) for a in range(1, n)]
    base = n_stat(mu)
    if not totals:
        # single color class: the unique filling, exponent n(mu)
        return LaurentPoly.q(base)
    total = LaurentPoly.zero()
    for config in itertools.product(*(_weighted_vectors(t, t) for t in totals)):
        top_label = max(
            (k for v in config for k, x in enumerate(v, 1) if x), default=0
        )
        i_max = max(part(mu, 1), top_label, 1)
        ssum = [[_min_sum(v, i) for i in range(i_max + 1)] for v in config]
        mu_min = [sum(min(i, k) for k in mu) for i in range(i_max + 1)]
        ok = True
        pairs = []
        for a in range(1, n):
            vec = config[a - 1]
            for i in range(1, i_max + 1):
                p = (mu_min[i] if a == 1 else 0) - 2 * ssum[a - 1][i]
                if a >= 2:
                    p += ssum[a - 2][i]
                if a < n - 1:
                    p += ssum[a][i]
                if p < 0:
                    ok = False
                    break
                m_ai = vec[i - 1] if i <= len(vec) else 0
                if m_ai:
                    pairs.append((p + m_ai, m_ai))
            if not ok:
                break
        if not ok:
            continue
        linear = sum(
            config[0][j - 1] * mu_min[j]
            for j in range(1, len(config[0]) + 1)
            if config[0][j - 1]
        )
        c = base + _pair_quadratic(config) - linear
        if c.denominator != 1:
            raise ValueError(
                f"non-integral exponent {c} at configuration {config} "
                f"(n={n}, lam={lam}, mu={mu})"
            )
        total = total + _binomial_product(pairs).shift(c)
    return total


def _zeta_counts(n: int, eta: Sequence[int]) -> list:
    eta = as_partition(eta)
    if eta and eta[0] > n - 1:
        raise ValueError(f"parts must be < n={n}")
    zeta = [0] * n
    for x in eta:
        zeta[x] += 1
    return zeta


def ff_kostka_dual(n: int, xi: Sequence[int], eta: Sequence[int]) -> LaurentPoly:
    """Dual multiplicity-vector form of the Kostka-Foulkes polynomial.

    Defined for xi with parts at most n and eta with parts below n; the
    color-a total is fixed by the part counts of eta and the first a
    conjugate parts of xi.
    """
    xi = as_partition(xi)
    eta = as_partition(eta)
    if xi and xi[0] > n:
        raise ValueError(f"first shape needs parts <= n={n}")
    if sum(xi) != sum(eta):
        raise ValueError("sizes differ")
    zeta = _zeta_counts(n, eta)
    xic = conjugate(xi)
    totals = []
    for a in range(1, n):
        t = sum(min(a, b) * zeta[b] for b in range(1, n)) - sum(
            part(xic, i) for i in range(1, a + 1)
        )
        totals.append(t)
    if any(t < 0 for t in totals):
        return LaurentPoly.zero()
    if not totals:
        return LaurentPoly.one() if sum(xi) == 0 else LaurentPoly.zero()
    total = LaurentPoly.zero()
    for config in itertools.product(*(_weighted_vectors(t, t) for t in totals)):
        top_label = max(
            (k for v in config for k, x in enumerate(v, 1) if x), default=0
        )
        i_max = max(top_label, 1)
        ssum = [[_min_sum(v, i) for i in range(i_max + 1)] for v in config]
        ok = True
        pairs = []
        for a in range(1, n):
            vec = config[a - 1]
            for i in range(1, i_max + 1):
                p = zeta[a] - 2 * ssum[a - 1][i]
                if a >= 2:
                    p += ssum[a - 2][i]
                if a < n - 1:
                    p += ssum[a][i]
                if p < 0:
                    ok = False
                    break
                m_ai = vec[i - 1] if i <= len(vec) else 0
                if m_ai:
                    pairs.append((p + m_ai, m_ai))
            if not ok:
                break
        if not ok:
            continue
        c = _pair_quadratic(config)
        if c.denominator != 1:
            raise ValueError(
                f"non-integral exponent {c} at configuration {config} "
                f"(n={n}, xi={xi}, eta={eta})"
            )
        total = total + _binomial_product(pairs).shift(c)
    return total


def ff_restricted_rect(n: int, level: int, mu: Sequence[int]) -> LaurentPoly:
    """Level-truncated multiplicity form, row flavor.

    Labels are cut at the level and only vacancies below it are
    constrained; the weight is the rectangle with |mu|/n cells per row,
    so |mu| must be divisible by n and parts of mu must not exceed the
    level.
    """
    mu = as_partition(mu)
    size = sum(mu)
    if size % n:
        raise ValueError(f"size {size} not divisible by n={n}")
    if mu and mu[0] > level:
        raise ValueError("parts must not exceed the level")
    k = size // n
    base = n_stat(mu)
    mu_min = [sum(min(i, x) for x in mu) for i in range(level + 1)]
    total = LaurentPoly.zero()
    gens = [list(_weighted_vectors((n - a) * k, level)) for a in range(1, n)]
    for config in itertools.product(*gens):
        ssum = [[_min_sum(v, i) for i in range(level)] for v in config]
        ok = True
        pairs = []
        for a in range(1, n):
            vec = config[a - 1]
            for i in range(1, level):
                p = (mu_min[i] if a == 1 else 0) - 2 * ssum[a - 1][i]
                if a >= 2:
                    p += ssum[a - 2][i]
                if a < n - 1:
                    p += ssum[a][i]
                if p < 0:
                    ok = False
                    break
                m_ai = vec[i - 1]
                if m_ai:
                    pairs.append((p + m_ai, m_ai))
            if not ok:
                break
        if not ok:
            continue
        linear = sum(config[0][j - 1] * mu_min[j] for j in range(1, level + 1))
        c = base + _pair_quadratic(config) - linear
        if c.denominator != 1:
            raise ValueError(
                f"non-integral exponent {c} at configuration {config} "
                f"(n={n}, level={level}, mu={mu})"
            )
        total = total + _binomial_product(pairs).shift(c)
    return total


def _dual_level_sum(
    n: int,
    level: int,
    zeta: Sequence[int],
    rhs: Sequence[Fraction],
    p_extra: Optional[list],
    c_linear: Optional[list],
    c_const: Fraction,
    label: str,
) -> LaurentPoly:
    """Shared core of the dual level-truncated forms.

    Each color carries a vector over labels 1..level; the weighted
    label sum must equal rhs[a-1], which pins the level slot (it must
    come out a nonnegative integer, else the color has no vectors).
    Vacancies use the level's inverse Cartan matrix and run over labels
    below the level; p_extra[a-1][i-1] adds to the vacancy of color a
    at label i, c_linear[k-1] adds to the exponent per unit of the
    color-1 vector at label k.
    """
    total = LaurentPoly.zero()
    if any(r < 0 for r in rhs):
        return total

    def color_vectors(a: int) -> Iterator[tuple]:
        goal = rhs[a - 1]
        if goal.denominator != 1:
            return

        def rec(lbl: int, remaining: int, acc: list) -> Iterator[tuple]:
            if lbl == level:
                top, rem = divmod(remaining, level)
                if rem == 0:
                    yield tuple(acc) + (top,)
                return
            for count in range(remaining // lbl + 1):
                acc.append(count)
                yield from rec(lbl + 1, remaining - lbl * count, acc)
                acc.pop()

        yield from rec(1, int(goal), [])

    gens = [list(color_vectors(a)) for a in range(1, n)]
    for config in itertools.product(*gens):
        ok = True
        pairs = []
        for a in range(1, n):
            for i in range(1, level):
                p = cartan_inverse_entry(level, 1, i) * zeta[a]
                if p_extra is not None:
                    p += p_extra[a - 1][i - 1]
                for b in range(1, n):
                    cab = _cartan_entry(a, b)
                    if not cab:
                        continue
                    vb = config[b - 1]
                    p -= cab * sum(
                        cartan_inverse_entry(level, i, k) * vb[k - 1]
                        for k in range(1, level)
                        if vb[k - 1]
                    )
                if p < 0:
                    ok = False
                    break
                if p.denominator != 1:
                    raise ValueError(
                        f"non-integral vacancy {p} at configuration {config} ({label})"
                    )
                m_ai = config[a - 1][i - 1]
                if m_ai:
                    pairs.append((int(p) + m_ai, m_ai))
            if not ok:
                break
        if not ok:
            continue
        c = _pair_quadratic(config) + c_const
        if c_linear is not None:
            c += sum(c_linear[k - 1] * config[0][k - 1] for k in range(1, level + 1))
        if c.denominator != 1:
            raise ValueError(
                f"non-integral exponent {c} at configuration {config} ({label})"
            )
        total = total + _binomial_product(pairs).shift(c)
    return total


def ff_restricted_rect_dual(n: int, level: int, eta: Sequence[int]) -> LaurentPoly:
    """Level-truncated multiplicity form, column flavor.

    eta collects column heights below n; its size must be divisible by
    n.  The level-label slot of each color is fixed by the color total
    and must come out a nonnegative integer.
    """
    eta = as_partition(eta)
    if sum(eta) % n:
        raise ValueError(f"size {sum(eta)} not divisible by n={n}")
    zeta = _zeta_counts(n, eta)
    rhs = [
        sum(cartan_inverse_entry(n, a, b) * zeta[b] for b in range(1, n))
        for a in range(1, n)
    ]
    return _dual_level_sum(n, level, zeta, rhs, None, None, Fraction(0), "column_level")


def ff_restricted_branch_dual(
    n: int,
    level: int,
    r: int,
    eta: Sequence[int],
    mu: Sequence[int],
) -> LaurentPoly:
    """Dual level-truncated form twisted by a corner index and a shape.

    Generalizes ff_restricted_rect_dual by a corner index r and a partition mu with
    parts below the level; specializing r=0, mu=() recovers ff_restricted_rect_dual
    exactly.  Requires |eta| = |mu| + level*r mod n.
    """
    eta = as_partition(eta)
    mu = as_partition(mu)
    if mu and mu[0] > level - 1:
        raise ValueError("twist shape needs parts < level")
    if not (0 <= r <= n - 1):
        raise ValueError(f"corner index {r} out of range for n={n}")
    if (sum(eta) - sum(mu) - level * r) % n:
        raise ValueError("size congruence |eta| = |mu| + level*r mod n fails")
    zeta = _zeta_counts(n, eta)
    mu_len = len(mu)
    size_mu = sum(mu)
    size_eta = sum(eta)
    rhs = [
        sum(cartan_inverse_entry(n, a, b) * zeta[b] for b in range(1, n))
        + level * mu_len
        - Fraction((n - a) * size_mu, n)
        + Fraction(a * level * r, n)
        for a in range(1, n)
    ]
    p_extra = [
        [
            (
                sum(
                    cartan_inverse_entry(level, level - mu[j], i)
                    for j in range(mu_len)
                )
                if a == 1
                else Fraction(0)
            )
            for i in range(1, level)
        ]
        for a in range(1, n)
    ]
    c_linear = [
        -Fraction(sum(min(level - mu[j], k) for j in range(mu_len)))
        for k in range(1, level + 1)
    ]
    c_const = (
        Fraction(n_stat(mu))
        - mu_len * (size_mu + level * r)
        + Fraction((r + mu_len) * (size_mu + level * r - size_eta), n)
        - Fraction(level * r * (r + 1), 2)
    )
    return _dual_level_sum(
        n, level, zeta, rhs, p_extra, c_linear, c_const, "column_level_twist"
    )


# ---------------------------------------------------------------------------
# certified enumeration boxes for positive definite forms


def _fraction_ceil(x) -> int:
    x = Fraction(x)
    return -((-x.numerator) // x.denominator)


def _fraction_floor(x) -> int:
    x = Fraction(x)
    return x.numerator // x.denominator


def _fraction_isqrt_up(x: Fraction) -> int:
    """Smallest integer u >= sqrt(x) for nonnegative rational x."""
    if x < 0:
        raise ValueError("negative radicand")
    u = math.isqrt(_fraction_ceil(x))
    while u * u < x:
        u += 1
    return u


def _invert_matrix(mat: Sequence[Sequence[Fraction]]) -> list:
    """Exact inverse by Gauss-Jordan; raises on a singular matrix."""
    d = len(mat)
    aug = [
        [Fraction(mat[i][j]) for j in range(d)]
        + [Fraction(int(i == j)) for j in range(d)]
        for i in range(d)
    ]
    for col in range(d):
        pivot = next((r for r in range(col, d) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular quadratic form")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(d):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[d:] for row in aug]


def is_positive_definite(mat: Sequence[Sequence[Fraction]]) -> bool:
    """Sylvester test: every leading principal minor positive."""
    d = len(mat)
    for k in range(1, d + 1):
        sub = [[Fraction(mat[i][j]) for j in range(k)] for i in range(k)]
        det = Fraction(1)
        for col in range(k):
            pivot = next((r for r in range(col, k) if sub[r][col] != 0), None)
            if pivot is None:
                return False
            if pivot != col:
                sub[col], sub[pivot] = sub[pivot], sub[col]
                det = -det
            det *= sub[col][col]
            for r in range(col + 1, k):
                f = sub[r][col] / sub[col][col]
                sub[r] = [x - f * y for x, y in zip(sub[r], sub[col])]
        if det <= 0:
            return False
    return True


def _ellipsoid_ranges(
    form: list, linear: list, budget: Fraction, free_slots: set
) -> Optional[list]:
    """Per-coordinate integer bounds containing {m : m'Fm + L'm <= budget}.

    Completing the square turns the region into an ellipsoid; for a
    positive definite F the extent of coordinate v around the center is
    exactly sqrt(R * (F^{-1})_vv).  Bounds are relaxed outward by one
    to absorb the integer square root.  Returns None when the region is
    empty; slots outside free_slots are clipped at zero.
    """
    d = len(form)
    if d == 0:
        return []
    inv = _invert_matrix(form)
    inv_l = [sum(inv[v][w] * linear[w] for w in range(d)) for v in range(d)]
    radius2 = budget + sum(linear[v] * inv_l[v] for v in range(d)) / 4
    if radius2 < 0:
        return None
    out = []
    for v in range(d):
        if inv[v][v] <= 0:
            raise ValueError("quadratic form is not positive definite")
        half = _fraction_isqrt_up(radius2 * inv[v][v])
        center = -inv_l[v] / 2
        lo = _fraction_ceil(center) - half - 1
        hi = _fraction_floor(center) + half + 1
        if v not in free_slots:
            lo = max(lo, 0)
        if hi < lo:
            return None
        out.append((lo, hi))
    return out


class BoxAuditError(RuntimeError):
    """Raised when enlarging a certified enumeration box changes a result."""


def _sum_over_box(
    form: list,
    linear: list,
    const: Fraction,
    ranges: list,
    denom_slots: list,
    residues: list,
    order: int,
) -> QSeries:
    """Accumulate q^{m'Fm + L'm + const} / prod (q)_{m_v} over the box.

    denom_slots lists the variables contributing Euler factors;
    residues is a list of (indices, weights, target, modulus)
    congruences.
    """
    out = QSeries.zero(order)
    volume = 1
    for lo, hi in ranges:
        volume *= hi - lo + 1
    if volume > 5_000_000:
        raise RuntimeError(
            f"enumeration box of volume {volume} is too large; lower the order"
        )
    for m in itertools.product(*(range(lo, hi + 1) for lo, hi in ranges)):
        good = True
        for idxs, weights, target, modulus in residues:
            s = sum(w * m[v] for v, w in zip(idxs, weights))
            if (s - target) % modulus:
                good = False
                break
        if not good:
            continue
        c = const
        for v in range(len(m)):
            if not m[v]:
                continue
            c += linear[v] * m[v]
            c += form[v][v] * m[v] * m[v]
            for w in range(v + 1, len(m)):
                if m[w]:
                    c += 2 * form[v][w] * m[v] * m[w]
        if c > order:
            continue
        tail_order = _fraction_ceil(Fraction(order) - c)
        term = QSeries.one(tail_order)
        for v in denom_slots:
            if m[v]:
                term = term * inv_qpochhammer_series(m[v], tail_order)
        out = out + term.shift(c).truncate(out.order)
    return out


def _certified_sum(
    form: list,
    linear: list,
    const: Fraction,
    free_slots: set,
    denom_slots: list,
    residues: list,
    order: int,
) -> QSeries:
    budget = Fraction(order) - const
    ranges = _ellipsoid_ranges(form, linear, budget, free_slots)
    if ranges is None:
        return QSeries.zero(order)
    first = _sum_over_box(form, linear, const, ranges, denom_slots, residues, order)
    widened = []
    for v, (lo, hi) in enumerate(ranges):
        pad = (hi - lo) // 2 + 1
        wl = lo - pad
        if v not in free_slots:
            wl = max(wl, 0)
        widened.append((wl, hi + pad))
    audit = _sum_over_box(form, linear, const, widened, denom_slots, residues, order)
    if first != audit:
        raise BoxAuditError("audit box found contributions outside the ellipsoid box")
    return first


# ---------------------------------------------------------------------------
# q-series evaluators


def _finish_series(inner: QSeries, prefactor_power: int, order: int) -> QSeries:
    if inner.is_zero():
        return QSeries.zero(order)
    pad = max(0, -_fraction_floor(inner.min_exp))
    pref = inv_pochhammer_series(prefactor_power, order + pad)
    return (inner * pref).truncate(order)


def _bump(counters: Optional[dict], key: str) -> None:
    if counters is not None:
        counters[key] = counters.get(key, 0) + 1


def string_series_single(
    n: int,
    level: int,
    r: int,
    nu: Sequence[int],
    lam: Sequence[int],
    order: int,
    counters: Optional[dict] = None,
) -> QSeries:
    """Weight-string series of the direct-sum module built on one shape.

    Constrained sum over colored vectors with labels below the level;
    an empty congruence class (non-integral per-color target) gives the
    zero series and bumps counters["empty_congruence_class"].
    """
    nu = as_partition(nu)
    if nu and nu[0] >= level:
        raise ValueError("fixed shape parts must be below the level")
    if not (0 <= r <= n - 1):
        raise ValueError(f"corner index {r} out of range")
    lam = _check_weight(n, lam, sum(int(x) for x in lam))
    shift = Fraction(sum(lam) - sum(nu) - level * r, n)
    if shift.denominator != 1:
        _bump(counters, "empty_congruence_class")
        return QSeries.zero(order)
    d = (n - 1) * (level - 1)
    nuc = conjugate(nu)

    def vid(a: int, i: int) -> int:
        return (a - 1) * (level - 1) + (i - 1)

    form = [[Fraction(0)] * d for _ in range(d)]
    for a in range(1, n):
        for b in range(1, n):
            cab = _cartan_entry(a, b)
            if not cab:
                continue
            for j in range(1, level):
                for k in range(1, level):
                    form[vid(a, j)][vid(b, k)] += Fraction(
                        cab, 2
                    ) * cartan_inverse_entry(level, j, k)
    linear = [Fraction(0)] * d
    for k in range(1, level):
        linear[vid(n - 1, k)] -= sum(
            cartan_inverse_entry(level, j, k) * (part(nuc, j) - part(nuc, j + 1))
            for j in range(1, level)
        )
    residues = []
    for a in range(1, n):
        target = sum(lam[b - 1] - shift for b in range(1, a + 1))
        residues.append(
            (
                [vid(a, i) for i in range(1, level)],
                list(range(1, level)),
                int(target),
                level,
            )
        )
    inner = _certified_sum(
        form, linear, Fraction(0), set(), list(range(d)), residues, order
    )
    return _finish_series(inner, n - 1, order)


def string_series_tensor(
    n: int,
    blocks: Sequence[tuple],
    lam: Sequence[int],
    order: int,
    counters: Optional[dict] = None,
) -> QSeries:
    """Weight-string series of a tensor product of corner modules.

    blocks is a list of (level_J, r_J).  The slots at cumulative levels
    range over all integers and carry no Euler factor; the prefactor
    power grows with the number of blocks.
    """
    blocks = [(int(l), int(rr)) for l, rr in blocks]
    if not blocks or any(l <= 0 for l, _ in blocks):
        raise ValueError("need positive block levels")
    if any(not (0 <= rr <= n - 1) for _, rr in blocks):
        raise ValueError("corner indices out of range")
    s = len(blocks)
    level = sum(l for l, _ in blocks)
    cums = list(itertools.accumulate(l for l, _ in blocks))
    marks = set(cums[:-1])
    lam = _check_weight(n, lam, sum(int(x) for x in lam))
    shift = Fraction(sum(lam) - sum(l * rr for l, rr in blocks), n)
    if shift.denominator != 1:
        _bump(counters, "empty_congruence_class")
        return QSeries.zero(order)
    d = (n - 1) * (level - 1)

    def vid(a: int, i: int) -> int:
        return (a - 1) * (level - 1) + (i - 1)

    form = [[Fraction(0)] * d for _ in range(d)]
    for a in range(1, n):
        for b in range(1, n):
            cab = _cartan_entry(a, b)
            if not cab:
                continue
            for j in range(1, level):
                for k in range(1, level):
                    form[vid(a, j)][vid(b, k)] += Fraction(
                        cab, 2
                    ) * cartan_inverse_entry(level, j, k)
    linear = [Fraction(0)] * d
    for j in range(1, level):
        linear[vid(n - 1, j)] -= sum(
            cartan_inverse_entry(level, j, cums[J]) * (blocks[J][1] - blocks[J + 1][1])
            for J in range(s - 1)
        )
    residues = []
    for a in range(1, n):
        target = sum(lam[b - 1] - shift for b in range(1, a + 1))
        residues.append(
            (
                [vid(a, i) for i in range(1, level)],
                list(range(1, level)),
                int(target),
                level,
            )
        )
    free = {vid(a, i) for a in range(1, n) for i in marks}
    denom = [vid(a, i) for a in range(1, n) for i in range(1, level) if i not in marks]
    inner = _certified_sum(form, linear, Fraction(0), free, denom, residues, order)
    return _finish_series(inner, (n - 1) * s, order)


def _poly_over_euler(poly: LaurentPoly, powers: Sequence[int], order: int) -> QSeries:
    """poly / prod_a (q)_{powers[a]} as a series to the given order."""
    if poly.is_zero():
        return QSeries.zero(order)
    pad = max(0, -_fraction_floor(poly.min_exp()))
    ser = QSeries.from_poly(poly, order)
    for z in powers:
        if z:
            ser = ser * inv_qpochhammer_series(z, order + pad)
    return ser.truncate(order)


def _banded_sum(order: int, band_term) -> QSeries:
    """Sum band_term(k) for k = 0, 1, 2, ... until two consecutive bands
    contribute nothing at or below the order.

    Band minima grow quadratically with k, so two high bands in a row
    certify the tail; a single empty band inside the support is skipped.
    """
    total = QSeries.zero(order)
    k = 0
    while True:
        term, min_deg = band_term(k)
        if min_deg is not None and min_deg <= order:
            total = total + term
            k += 1
            continue
        term2, min2 = band_term(k + 1)
        if min2 is not None and min2 <= order:
            total = total + term2
            k += 2
            continue
        return total


def spinon_branching_series(
    n: int, level: int, lam: Sequence[int], order: int
) -> QSeries:
    """Finite-subalgebra branching series of the level-l corner module.

    Sums dual Kostka-Foulkes factors against column level-truncated
    factors over column-height partitions, divided by Euler factors;
    bands are indexed by the size of the column partition.
    """
    lam = as_partition(lam)
    if sum(lam) % n:
        raise ValueError(f"weight size must be divisible by n={n}")
    if len(lam) > n - 1:
        raise ValueError("weight must have fewer than n rows")
    lamc = conjugate(lam)
    size_lam = sum(lam)

    def band_term(k: int):
        size = size_lam + n * k
        term = QSeries.zero(order)
        min_deg = None
        xi = as_partition(sorted(((n,) * k) + lamc, reverse=True))
        for eta in partitions_of(size, max_part=n - 1):
            zeta = _zeta_counts(n, eta)
            kf = ff_kostka_dual(n, xi, eta)
            if kf.is_zero():
                continue
            fl = ff_restricted_rect_dual(n, level, eta)
            if fl.is_zero():
                continue
            prod = kf * fl
            lead = prod.min_exp()
            min_deg = lead if min_deg is None else min(min_deg, lead)
            if lead <= order:
                term = term + _poly_over_euler(prod, zeta[1:], order)
        return term, min_deg

    return _banded_sum(order, band_term)


def rsos_spinon_series(n: int, level: int, t: int, order: int) -> QSeries:
    """Bilinear column-truncation series at a level split (t, level-t)."""
    if not (1 <= t <= level - 1):
        raise ValueError("split must be strictly inside the level")

    def band_term(k: int):
        term = QSeries.zero(order)
        min_deg = None
        for eta in partitions_of(n * k, max_part=n - 1):
            zeta = _zeta_counts(n, eta)
            fa = ff_restricted_rect_dual(n, level - t, eta)
            if fa.is_zero():
                continue
            fb = ff_restricted_rect_dual(n, t, eta)
            if fb.is_zero():
                continue
            prod = fa * fb
            lead = prod.min_exp()
            min_deg = lead if min_deg is None else min(min_deg, lead)
            if lead <= order:
                term = term + _poly_over_euler(prod, zeta[1:], order)
        return term, min_deg

    return _banded_sum(order, band_term)


def twisted_branching_series(
    n: int,
    level: int,
    r: int,
    mu: Sequence[int],
    lam: Sequence[int],
    order: int,
) -> QSeries:
    """Banded sum pairing dual Kostka factors with the twisted dual form.

    The stabilized limit of renormalized Kostka-Foulkes polynomials
    along a level ladder with corner index r and a fixed tail mu.
    """
    lam = as_partition(lam)
    mu = as_partition(mu)
    if len(lam) > n - 1:
        raise ValueError("weight must have fewer than n rows")
    if (sum(lam) - sum(mu) - level * r) % n:
        raise ValueError("size congruence |lam| = |mu| + level*r mod n fails")
    lamc = conjugate(lam)
    size_lam = sum(lam)

    def band_term(k: int):
        size = size_lam + n * k
        term = QSeries.zero(order)
        min_deg = None
        xi = as_partition(sorted(((n,) * k) + lamc, reverse=True))
        for eta in partitions_of(size, max_part=n - 1):
            zeta = _zeta_counts(n, eta)
            kf = ff_kostka_dual(n, xi, eta)
            if kf.is_zero():
                continue
            fl = ff_restricted_branch_dual(n, level, r, eta, mu)
            if fl.is_zero():
                continue
            prod = kf * fl
            lead = prod.min_exp()
            min_deg = lead if min_deg is None else min(min_deg, lead)
            if lead <= order:
                term = term + _poly_over_euler(prod, zeta[1:], order)
        return term, min_deg

    return _banded_sum(order, band_term)


# ---------------------------------------------------------------------------
# arbitrary simple-type string series (conjectural)


class CartanDatum:
    """Symmetrized root data of a finite-type simple Lie algebra.

    inner[a][b] holds the inner products of simple roots in the
    normalization where long roots have square length 2; t[a] is
    2/|alpha_a|^2, an integer in {1,2,3}.
    """

    __slots__ = ("rank", "inner", "t", "name")

    def __init__(self, inner: Sequence[Sequence[Fraction]], name: str = ""):
        rank = len(inner)
        mat = tuple(tuple(Fraction(x) for x in row) for row in inner)
        if any(len(row) != rank for row in mat):
            raise ValueError("inner product matrix must be square")
        for a in range(rank):
            for b in range(rank):
                if mat[a][b] != mat[b][a]:
                    raise ValueError("inner product matrix must be symmetric")
        t = []
        for a in range(rank):
            if mat[a][a] <= 0:
                raise ValueError("diagonal inner products must be positive")
            ta = Fraction(2) / mat[a][a]
            if ta.denominator != 1 or int(ta) not in (1, 2, 3):
                raise ValueError(
                    f"normalization gives t_{a + 1} = {ta}, expected 1, 2 or 3"
                )
            t.append(int(ta))
        if not is_positive_definite([list(row) for row in mat]):
            raise ValueError("inner product matrix must be positive definite")
        self.rank = rank
        self.inner = mat
        self.t = tuple(t)
        self.name = name or f"rank{rank}"

    @classmethod
    def simply_laced_a(cls, rank: int) -> "CartanDatum":
        return cls(
            [[Fraction(x) for x in row] for row in cartan_matrix(rank)],
            name=f"A{rank}",
        )

    @classmethod
    def from_cartan(
        cls,
        cartan: Sequence[Sequence[int]],
        symmetrizer: Sequence[int],
        name: str = "",
    ) -> "CartanDatum":
        """Build from cartan[a][b] = 2 (alpha_a|alpha_b) / (alpha_a|alpha_a)
        and the diagonal symmetrizer t_a = 2/|alpha_a|^2."""
        rank = len(cartan)
        t = [int(x) for x in symmetrizer]
        if len(t) != rank:
            raise ValueError("symmetrizer length mismatch")
        inner = [
            [Fraction(cartan[a][b], t[a]) for b in range(rank)] for a in range(rank)
        ]
        return cls(inner, name=name)

    def __repr__(self):
        return f"CartanDatum({self.name}, rank={self.rank})"


def general_string_series(
    datum: CartanDatum,
    levels: Sequence[int],
    lam_coords: Sequence[int],
    order: int,
) -> QSeries:
    """Conjectural corner-tensor string series for any simple type.

    levels lists the tensor blocks; lam_coords gives the weight in the
    simple-root basis.  Labels run to t_a * level - 1 per color, the
    scaled cumulative-level slots range over all integers without Euler
    factors, and each color's weighted label sum is fixed modulo
    level * t_a.
    """
    levels = [int(x) for x in levels]
    if not levels or any(x <= 0 for x in levels):
        raise ValueError("need positive block levels")
    rank = datum.rank
    lam_coords = tuple(int(x) for x in lam_coords)
    if len(lam_coords) != rank:
        raise ValueError(f"weight needs {rank} root coordinates")
    level = sum(levels)
    s = len(levels)
    cums = list(itertools.accumulate(levels))
    slots = [
        (a, j) for a in range(1, rank + 1) for j in range(1, datum.t[a - 1] * level)
    ]
    index = {v: k for k, v in enumerate(slots)}
    d = len(slots)
    form = [[Fraction(0)] * d for _ in range(d)]
    for va, (a, j) in enumerate(slots):
        ta = datum.t[a - 1]
        for vb, (b, k) in enumerate(slots):
            tb = datum.t[b - 1]
            ip = datum.inner[a - 1][b - 1]
            if not ip:
                continue
            form[va][vb] += (
                Fraction(1, 2)
                * ip
                * (Fraction(min(tb * j, ta * k)) - Fraction(j * k, level))
            )
    linear = [Fraction(0)] * d
    residues = []
    for a in range(1, rank + 1):
        ta = datum.t[a - 1]
        residues.append(
            (
                [index[(a, j)] for j in range(1, ta * level)],
                list(range(1, ta * level)),
                lam_coords[a - 1],
                level * ta,
            )
        )
    free = set()
    denom = []
    for v, (a, j) in enumerate(slots):
        ta = datum.t[a - 1]
        if j in {ta * c for c in cums[:-1]}:
            free.add(v)
        else:
            denom.append(v)
    inner = _certified_sum(form, linear, Fraction(0), free, denom, residues, order)
    return _finish_series(inner, rank * s, order)
