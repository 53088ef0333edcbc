"""Partitions, semistandard tableaux, the charge statistic, Kostka numbers
and Kostka polynomials."""

from functools import lru_cache

from .qalgebra import LaurentPoly


def as_partition(parts):
    """Normalize to a tuple: weakly decreasing nonnegative ints, zeros dropped."""
    out = []
    prev = None
    for p in parts:
        p = int(p)
        if p < 0:
            raise ValueError("negative part %d" % p)
        if prev is not None and p > prev:
            raise ValueError("parts must be weakly decreasing: %r" % (tuple(parts),))
        prev = p
        if p > 0:
            out.append(p)
    return tuple(out)


def conjugate(lam):
    """Transpose of the Young diagram."""
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def part(lam, i):
    """i-th part (1-based), zero beyond the last row."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def union_op(lam, mu):
    """Multiset union of parts."""
    return tuple(sorted(list(as_partition(lam)) + list(as_partition(mu)), reverse=True))


def plus_op(lam, mu):
    """Partwise sum (pad the shorter with zeros)."""
    lam, mu = as_partition(lam), as_partition(mu)
    n = max(len(lam), len(mu))
    return as_partition(tuple(part(lam, i) + part(mu, i) for i in range(1, n + 1)))


def n_stat(lam):
    """n(lam) = sum_i binom(lam'_i, 2) = sum_i (i-1) lam_i."""
    return sum((i - 1) * p for i, p in enumerate(as_partition(lam), start=1))


def is_horizontal_strip(inner, outer):
    """True when outer/inner is a horizontal strip (at most one cell per column)."""
    inner, outer = as_partition(inner), as_partition(outer)
    rows = max(len(inner), len(outer))
    for i in range(1, rows + 1):
        if part(outer, i) < part(inner, i):
            return False
        if i >= 2 and part(outer, i) > part(inner, i - 1):
            return False
    return True


def partitions_of(total, max_part=None, max_len=None):
    """Yield all partitions of `total` (largest part first), optionally bounded."""
    if max_part is None:
        max_part = total
    if max_len is None:
        max_len = total

    def rec(remaining, cap, slots, prefix):
        if remaining == 0:
            yield tuple(prefix)
            return
        if slots == 0:
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            yield from rec(remaining - p, p, slots - 1, prefix)
            prefix.pop()

    yield from rec(total, max_part, max_len, [])


def iter_compositions(total, length):
    """All tuples of `length` nonnegative ints summing to `total`."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in iter_compositions(total - first, length - 1):
            yield (first,) + rest


class Tableau:
    """Semistandard Young tableau, stored as a tuple of row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        widths = [len(r) for r in rows]
        if any(widths[i] < widths[i + 1] for i in range(len(widths) - 1)):
            raise ValueError("row lengths must weakly decrease")
        for r in rows:
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
                raise ValueError("rows must weakly increase")
        for i in range(len(rows) - 1):
            for j in range(len(rows[i + 1])):
                if rows[i][j] >= rows[i + 1][j]:
                    raise ValueError("columns must strictly increase")
        self.rows = rows

    def shape(self):
        return tuple(len(r) for r in self.rows)

    def weight(self):
        top = max((max(r) for r in self.rows if r), default=0)
        w = [0] * top
        for r in self.rows:
            for x in r:
                w[x - 1] += 1
        return tuple(w)

    def word(self):
        """Row-reading word: bottom row to top row, each row left to right."""
        out = []
        for r in reversed(self.rows):
            out.extend(r)
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Tableau(%s)" % (self.rows,)


def enumerate_ssyt(shape, weight):
    """All SSYT of the given shape and content, sorted by row-reading word.

    `weight` may be any composition; entry i of the filling appears weight[i-1]
    times.
    """
    shape = as_partition(shape)
    weight = tuple(int(w) for w in weight)
    if sum(shape) != sum(weight):
        return []
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    remaining = list(weight)
    grid = [[0] * row for row in shape]
    found = []

    def rec(k):
        if k == len(cells):
            found.append(Tableau([tuple(r) for r in grid]))
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, len(weight) + 1):
            if remaining[v - 1] == 0:
                continue
            grid[i][j] = v
            remaining[v - 1] -= 1
            rec(k + 1)
            remaining[v - 1] += 1
            grid[i][j] = 0

    rec(0)
    found.sort(key=lambda t: t.word())
    return found


def _charge_standard(word):
    """Charge of a word using each letter 1..m exactly once."""
    pos = {}
    for i, x in enumerate(word):
        pos[x] = i
    total = 0
    idx = 0
    for r in range(2, len(word) + 1):
        if pos[r] > pos[r - 1]:
            idx += 1
        total += idx
    return total


def charge_word(word, strict=True):
    """Lascoux-Schutzenberger charge of a word with partition content.

    Standard subwords are split off one at a time: take the rightmost 1, then
    scan leftward (wrapping cyclically) for a 2, then a 3, and so on up to the
    largest remaining letter.  The charge of the word is the sum of the
    charges of its standard subwords.
    """
    word = list(word)
    if word:
        top = max(word)
        counts = [word.count(v) for v in range(1, top + 1)]
        if strict and any(counts[i] < counts[i + 1] for i in range(top - 1)):
            raise ValueError("content %r is not a partition" % (counts,))
        if strict and counts and counts[-1] == 0:
            raise ValueError("letter gap in word")
    total = 0
    while word:
        m = max(word)
        chosen = [None] * (m + 1)
        cur = max(i for i, x in enumerate(word) if x == 1)
        chosen[1] = cur
        for letter in range(2, m + 1):
            n = len(word)
            i = (cur - 1) % n
            while word[i] != letter:
                i = (i - 1) % n
            chosen[letter] = i
            cur = i
        picked = sorted(chosen[1:])
        sub = [word[i] for i in picked]
        total += _charge_standard(sub)
        for i in reversed(picked):
            word.pop(i)
    return total


def charge(tab):
    """Charge of a tableau (content must be a partition)."""
    return charge_word(tab.word())


def kostka_number(shape, weight):
    """Number of SSYT of `shape` and content `weight`, by horizontal-strip DP.

    Scales to shapes far beyond what enumerate_ssyt can list.
    """
    return _kostka_number_cached(as_partition(shape),
                                 tuple(int(w) for w in weight))


@lru_cache(maxsize=None)
def _kostka_number_cached(shape, weight):
    if sum(shape) != sum(weight):
        return 0
    current = {(): 1}
    for w in weight:
        nxt = {}
        for nu, cnt in current.items():
            for kappa in _hstrip_extensions(nu, w, shape):
                nxt[kappa] = nxt.get(kappa, 0) + cnt
        current = nxt
        if not current:
            return 0
    return current.get(shape, 0)


def _hstrip_extensions(nu, size, bound):
    """Partitions kappa with nu <= kappa <= bound, |kappa/nu| = size, horizontal strip."""
    rows = len(bound)

    def rec(i, remaining, prefix):
        if i > rows:
            if remaining == 0:
                yield as_partition(prefix)
            return
        lo = part(nu, i)
        hi = min(part(bound, i), prefix[-1] if prefix else bound[0] if bound else 0)
        if i >= 2:
            hi = min(hi, part(nu, i - 1))
        # cells left to place cannot exceed what later rows can hold; cheap cut
        for val in range(lo, hi + 1):
            add = val - lo
            if add > remaining:
                break
            prefix.append(val)
            yield from rec(i + 1, remaining - add, prefix)
            prefix.pop()

    yield from rec(1, size, [])


def kostka_foulkes(shape, weight):
    """Kostka polynomial K_{shape,weight}(q) as sum of q^charge over SSYT.

    `weight` is sorted into a partition first; the polynomial only depends on
    the multiset of entries.
    """
    shape = as_partition(shape)
    mu = tuple(sorted((int(w) for w in weight if int(w) != 0), reverse=True))
    return _kostka_foulkes_cached(shape, mu)


@lru_cache(maxsize=None)
def _kostka_foulkes_cached(shape, mu):
    out = LaurentPoly.zero()
    for tab in enumerate_ssyt(shape, mu):
        out = out + LaurentPoly.q(charge(tab))
    return out
