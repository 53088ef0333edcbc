"""Path set enumeration and one-dimensional sums.

Three nested classes of paths live in B_(mu_1) x ... x B_(mu_m):

* unrestricted: fixed weight composition, no other condition;
* classical: every proper prefix weight dominates the next factor's
  string data for the indices 1..n-1;
* level restricted: the same prefix condition for all indices 0..n-1,
  measured against a running affine weight vector that starts at a
  level-l dominant weight.

The one-dimensional sum attached to a class is the generating
polynomial of the energy statistic over it, with the exponent sign
depending on the crystal family (+E for symmetric tensor factors,
-E for antisymmetric ones).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .combinatorics import as_partition, conjugate, part
from .crystal import (
    ANTISYM,
    SYM,
    ClassicalWeight,
    CrystalElement,
    Path,
    crystal_elements,
)
from .energy import energy, ground_state_energy
from .qalgebra import LaurentPoly

UNRESTRICTED = "unrestricted"
CLASSICAL = "classical"
RESTRICTED = "restricted"

_CLASSES = (UNRESTRICTED, CLASSICAL, RESTRICTED)


def _check_kind_shape(n: int, mu: Sequence[int], kind: str, level: Optional[int]) -> tuple:
    mu = as_partition(mu)
    if not mu:
        raise ValueError("shape must have at least one part")
    if kind == ANTISYM and mu[0] > n - 1:
        raise ValueError(f"antisymmetric factors need parts < n, got {mu[0]} with n={n}")
    if kind == SYM and level is not None and mu[0] > level:
        raise ValueError(f"symmetric level-{level} paths need mu_1 <= level, got {mu[0]}")
    return mu


def restricted_partition_ok(lam: Sequence[int], level: int, n: int) -> bool:
    """True when lam fits the level: lam_1 - lam_n <= level."""
    lam = tuple(lam)
    if len(lam) > n:
        return False
    lam_n = lam[n - 1] if len(lam) == n else 0
    first = lam[0] if lam else 0
    return first - lam_n <= level


def _initial_vector(n: int, level: Optional[int]) -> list:
    a = [0] * n
    if level is not None:
        a[0] = level
    return a


def _weight_targets(n: int, lam: Optional[Sequence[int]], total: int) -> Optional[tuple]:
    if lam is None:
        return None
    lam = tuple(int(x) for x in lam)
    if len(lam) > n:
        if any(lam[n:]):
            raise ValueError(f"weight composition longer than n={n}")
        lam = lam[:n]
    lam = lam + (0,) * (n - len(lam))
    if any(x < 0 for x in lam):
        raise ValueError("weight composition must be nonnegative")
    if sum(lam) != total:
        raise ValueError(f"weight composition sums to {sum(lam)}, shape needs {total}")
    return lam


def iter_paths(
    n: int,
    mu: Sequence[int],
    kind: str = SYM,
    cls: str = UNRESTRICTED,
    lam: Optional[Sequence[int]] = None,
    level: Optional[int] = None,
    check_from: int = 1,
) -> Iterator[Path]:
    """Depth-first enumeration of a path class.

    cls selects the prefix condition; lam (optional except for the
    unrestricted class) fixes the weight composition.  check_from is
    the smallest operator index whose prefix condition is enforced:
    1 for classical, 0 for level restricted.
    """
    if cls not in _CLASSES:
        raise ValueError(f"unknown path class {cls!r}")
    if cls == RESTRICTED:
        if level is None:
            raise ValueError("restricted enumeration needs a level")
        check_from = 0
    elif cls == CLASSICAL:
        level = None
        check_from = 1
    else:
        level = None
        check_from = n  # no prefix condition at all

    mu = _check_kind_shape(n, mu, kind, level)
    target = _weight_targets(n, lam, sum(mu))

    m = len(mu)
    suffix = [0] * (m + 1)
    for j in range(m - 1, -1, -1):
        suffix[j] = suffix[j + 1] + mu[j]

    factors = {d: crystal_elements(n, kind, d) for d in set(mu)}
    chosen: list = []
    used = [0] * n
    avec = _initial_vector(n, level)

    def feasible(j: int) -> bool:
        if target is None:
            return True
        rem = suffix[j]
        return all(used[i] <= target[i] for i in range(n)) and sum(target) - sum(used) == rem

    def admit(b: CrystalElement) -> bool:
        for i in range(check_from, n):
            if b.epsilon(i) > avec[i]:
                return False
        return True

    def rec(j: int) -> Iterator[Path]:
        if j == m:
            if target is None or tuple(used) == target:
                yield Path(tuple(chosen))
            return
        for b in factors[mu[j]]:
            if target is not None:
                if any(used[i] + b.coords[i] > target[i] for i in range(n)):
                    continue
            if not admit(b):
                continue
            chosen.append(b)
            for i in range(n):
                used[i] += b.coords[i]
                # phi_i - eps_i = x_i - x_{i+1 cyc} in both families
                avec[i] += b.coords[i - 1] - b.coords[i]
            if feasible(j + 1):
                yield from rec(j + 1)
            for i in range(n):
                avec[i] -= b.coords[i - 1] - b.coords[i]
            for i in range(n):
                used[i] -= b.coords[i]
            chosen.pop()

    yield from rec(0)


def enumerate_paths(
    n: int,
    mu: Sequence[int],
    kind: str = SYM,
    cls: str = UNRESTRICTED,
    lam: Optional[Sequence[int]] = None,
    level: Optional[int] = None,
) -> list:
    """All paths of the class with their energies, in coordinate order."""
    if cls == UNRESTRICTED and lam is None:
        raise ValueError("unrestricted enumeration needs a weight composition")
    if cls == CLASSICAL and lam is not None:
        lam_t = tuple(lam)
        if list(lam_t) != sorted(lam_t, reverse=True):
            raise ValueError("classical class takes a partition weight")
    if cls == RESTRICTED and lam is not None:
        if level is None:
            raise ValueError("restricted enumeration needs a level")
        lam_t = tuple(lam)
        if list(lam_t) != sorted(lam_t, reverse=True) or not restricted_partition_ok(lam_t, level, n):
            raise ValueError(f"{lam_t} is not a level-{level} restricted partition")
    out = [(p, energy(p)) for p in iter_paths(n, mu, kind, cls, lam, level)]
    out.sort(key=lambda pe: tuple(c for b in pe[0].components for c in b.coords))
    return out


def onedsum(
    n: int,
    mu: Sequence[int],
    kind: str = SYM,
    cls: str = UNRESTRICTED,
    lam: Optional[Sequence[int]] = None,
    level: Optional[int] = None,
) -> LaurentPoly:
    """Sum of q^{E} (symmetric) or q^{-E} (antisymmetric) over the class."""
    if cls == UNRESTRICTED and lam is None:
        raise ValueError("unrestricted 1dsum needs a weight composition")
    sign = 1 if kind == SYM else -1
    total = LaurentPoly.zero()
    for p in iter_paths(n, mu, kind, cls, lam, level):
        total = total + LaurentPoly.q(sign * energy(p))
    return total


def onedsum_table(
    n: int,
    mu: Sequence[int],
    kind: str = SYM,
    cls: str = UNRESTRICTED,
    level: Optional[int] = None,
) -> dict:
    """1dsums of every weight at once, keyed by weight composition.

    Enumerates the class without a weight filter, then buckets by
    weight composition; one pass instead of one per weight.
    """
    sign = 1 if kind == SYM else -1
    table: dict = {}
    for p in iter_paths(n, mu, kind, cls, None, level):
        key = p.weight_composition()
        poly = table.get(key, LaurentPoly.zero())
        table[key] = poly + LaurentPoly.q(sign * energy(p))
    return table


# --- highest weight sets over a level-l dominant starting point ---


class HwEntry:
    """A path satisfying the full prefix condition from l*W_r, with
    its energy and final classical weight."""

    __slots__ = ("path", "weight", "energy")

    def __init__(self, path: Path, weight: ClassicalWeight, energy_: int):
        self.path = path
        self.weight = weight
        self.energy = energy_

    def __iter__(self):
        return iter((self.path, self.weight, self.energy))

    def __eq__(self, other):
        if not isinstance(other, HwEntry):
            return NotImplemented
        return (self.path, self.weight, self.energy) == (other.path, other.weight, other.energy)

    def __hash__(self):
        return hash((self.path, self.weight, self.energy))

    def __repr__(self):
        return f"HwEntry({self.path.word()}, {self.weight}, E={self.energy})"


def hw_set(n: int, level: int, r: int, mu: Sequence[int], kind: str = SYM) -> list:
    """All paths whose every prefix stays dominant from level*W_r on.

    The prefix condition is checked for all operator indices; the
    returned weight is the starting weight plus the path weight.
    """
    mu = _check_kind_shape(n, mu, kind, level if kind == SYM else None)
    if kind == SYM and mu[0] > level:
        raise ValueError("parts must not exceed the level")
    r = r % n
    start = ClassicalWeight.fundamental(n, r, level)
    m = len(mu)
    factors = {d: crystal_elements(n, kind, d) for d in set(mu)}
    avec = [start.pair(i) for i in range(n)]
    chosen: list = []
    found: list = []

    def rec(j: int) -> None:
        if j == m:
            p = Path(tuple(chosen))
            found.append(HwEntry(p, start + p.weight(), energy(p)))
            return
        for b in factors[mu[j]]:
            if any(b.epsilon(i) > avec[i] for i in range(n)):
                continue
            chosen.append(b)
            for i in range(n):
                avec[i] += b.coords[i - 1] - b.coords[i]
            rec(j + 1)
            for i in range(n):
                avec[i] -= b.coords[i - 1] - b.coords[i]
            chosen.pop()

    rec(0)
    found.sort(key=lambda e: tuple(c for b in e.path.components for c in b.coords))
    return found


def _diagram_extensions(nu: tuple, size: int, n: int, level: int) -> Iterator[tuple]:
    """Diagrams obtained from nu by a horizontal strip of `size` cells,
    at most n rows.  The strip rule wraps around: besides the usual
    bound (new row i+1 at most old row i), the new first row may exceed
    the old n-th row by at most `level`."""
    rows = [part(nu, i) for i in range(1, n + 1)]

    def rec(i: int, remaining: int, acc: list) -> Iterator[tuple]:
        if i > n:
            if remaining == 0:
                yield tuple(x for x in acc if x)
            return
        lo = rows[i - 1]
        hi = rows[i - 2] if i >= 2 else rows[n - 1] + level
        hi = min(hi, lo + remaining)
        for v in range(hi, lo - 1, -1):
            acc.append(v)
            yield from rec(i + 1, remaining - (v - lo), acc)
            acc.pop()

    yield from rec(1, size, [])


def _diagram_weight(n: int, level: int, nu: tuple) -> ClassicalWeight:
    # each column of height h contributes W_{h mod n} - W_0 on top of level*W_0
    coeffs = [0] * n
    coeffs[0] = level
    width = nu[0] if nu else 0
    for k in range(1, width + 1):
        h = sum(1 for x in nu if x >= k)
        coeffs[h % n] += 1
        coeffs[0] -= 1
    return ClassicalWeight(tuple(coeffs))


def hw_set_via_chains(n: int, level: int, r: int, mu: Sequence[int]) -> list:
    """Same set as hw_set (symmetric kind), built from diagram chains.

    A path corresponds to a chain of diagrams starting at the r-column
    rectangle (level^r), growing by a horizontal strip of mu_a cells at
    step a, never deeper than n rows and never wider than `level`
    between the first and n-th rows.  Row increments give the
    coordinates of the a-th component.
    """
    mu = as_partition(mu)
    if mu and mu[0] > level:
        raise ValueError("parts must not exceed the level")
    r = r % n
    base = (level,) * r
    m = len(mu)
    found: list = []
    chain: list = [base]

    def rec(a: int) -> None:
        if a == m:
            comps = []
            for idx in range(1, m + 1):
                prev, cur = chain[idx - 1], chain[idx]
                coords = tuple(part(cur, i) - part(prev, i) for i in range(1, n + 1))
                comps.append(CrystalElement(n, SYM, coords))
            p = Path(tuple(comps))
            found.append(HwEntry(p, _diagram_weight(n, level, chain[-1]), energy(p)))
            return
        for nxt in _diagram_extensions(chain[-1], mu[a], n, level):
            chain.append(nxt)
            rec(a + 1)
            chain.pop()

    rec(0)
    found.sort(key=lambda e: tuple(c for b in e.path.components for c in b.coords))
    return found


def decompose(n: int, level: int, r: int, mu: Sequence[int], kind: str = SYM) -> list:
    """Branching data: (weight, delta shift) per highest weight path.

    The shift is -(E(p) - Ebar(level, r, mu)), a rational number; the
    list is ordered like hw_set.
    """
    ebar = ground_state_energy(n, level, r, mu)
    return [
        (entry.weight, -(Fraction(entry.energy) - ebar))
        for entry in hw_set(n, level, r, mu, kind)
    ]


def weight_of_level(n: int, level: int, lam: Sequence[int]) -> ClassicalWeight:
    """Dominant weight of the given level attached to a restricted partition."""
    lam = as_partition(lam)
    if not restricted_partition_ok(lam, level, n):
        raise ValueError(f"{lam} is not a level-{level} restricted partition for n={n}")
    lam_full = [part(lam, i) for i in range(1, n + 1)]
    coeffs = [level - (lam_full[0] - lam_full[n - 1])]
    coeffs += [lam_full[i - 1] - lam_full[i] for i in range(1, n)]
    return ClassicalWeight(tuple(coeffs))


def restricted_partition_of(weight: ClassicalWeight, size: int) -> Optional[tuple]:
    """Partition lam with |lam| = size whose level-`level` weight is `weight`.

    Inverts weight_of_level against a fixed total; None when the level-0
    difference from size*W_0/n is not integral.
    """
    n = weight.n()
    tails = [0] * n
    for i in range(n - 2, -1, -1):
        tails[i] = tails[i + 1] + weight.pair(i + 1)
    base, rem = divmod(size - sum(tails), n)
    if rem or base + tails[-1] < 0:
        return None
    lam = tuple(t + base for t in tails)
    if any(x < 0 for x in lam):
        return None
    return tuple(x for x in lam if x)
