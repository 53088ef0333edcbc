"""Local energy, the combinatorial isomorphism swapping adjacent tensor
factors, and the energy of a path by two independent algorithms.

Elements are drawn as columns of dots: x_i dots in row i, rows numbered 1..n
from the top.  For a pair b1 (x) b2 with deg b1 >= deg b2 every right-column
dot is matched with a left-column dot:

  symmetric:      partner sits in the lowest row strictly above the dot;
                  if no left dot is strictly above, wrap to the lowest row
                  overall (a winding pair).
  antisymmetric:  partner sits in the highest row not above the dot; if none,
                  wrap to the highest row overall (winding).

H counts winding pairs, positively for the symmetric family and negatively
for the antisymmetric one.  Sliding the unmatched left dots into the right
column realizes the isomorphism b1 (x) b2 -> b2' (x) b1'.
"""

from fractions import Fraction
from functools import lru_cache

from .crystal import SYM, ANTISYM, CrystalElement, Path


def _find_partner(counts, row, antisym):
    """Partner row for a right dot in `row` given left dot counts (1-based rows).

    Returns (partner_row, winding).
    """
    n = len(counts)
    if not antisym:
        for r in range(row - 1, 0, -1):
            if counts[r - 1]:
                return r, False
        for r in range(n, 0, -1):
            if counts[r - 1]:
                return r, True
    else:
        for r in range(row, n + 1):
            if counts[r - 1]:
                return r, False
        for r in range(1, n + 1):
            if counts[r - 1]:
                return r, True
    raise ValueError("no left dots remain")


def _pair_columns(left, right_rows, antisym):
    """Match each right dot with a left dot; left is a count list, consumed.

    Returns (windings, matched_rows) where matched_rows counts the consumed
    left dots per row.
    """
    n = len(left)
    matched = [0] * n
    windings = 0
    for row in right_rows:
        r, w = _find_partner(left, row, antisym)
        left[r - 1] -= 1
        matched[r - 1] += 1
        if w:
            windings += 1
    return windings, matched


def _rows_of(b, ascending=True):
    rows = []
    for r, c in enumerate(b.coords, start=1):
        rows.extend([r] * c)
    return rows if ascending else list(reversed(rows))


@lru_cache(maxsize=None)
def local_energy_iso(b1, b2):
    """(H(b1 (x) b2), (b2', b1')) with deg b1 >= deg b2.

    The image pair realizes the factor swap: b2' keeps the matched left dots,
    b1' gets the right dots plus the unmatched left dots.  Elements are
    immutable, so results are shared; the key space is bounded by the degrees
    in play.
    """
    if b1.n != b2.n or b1.kind != b2.kind:
        raise ValueError("mixed factors")
    if b1.degree() < b2.degree():
        raise ValueError("left degree must dominate: %d < %d"
                         % (b1.degree(), b2.degree()))
    antisym = b1.kind == ANTISYM
    left = list(b1.coords)
    windings, matched = _pair_columns(left, _rows_of(b2), antisym)
    b2_new = CrystalElement(b1.n, b1.kind, matched)
    b1_new = CrystalElement(b1.n, b1.kind,
                            [l + y for l, y in zip(left, b2.coords)])
    h = -windings if antisym else windings
    return h, (b2_new, b1_new)


def local_energy(b1, b2):
    return local_energy_iso(b1, b2)[0]


def energy_parts(path):
    """E^{(j)} for j = 1..m by leftward propagation through the isomorphism.

    The j-th entry sums H(b_i (x) c) as the j-th factor c is carried to the
    front past the original b_{j-1}, ..., b_1.
    """
    mu = path.shape()
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError("path shape must weakly decrease: %r" % (mu,))
    comps = path.components
    parts = [0]
    for j in range(1, len(comps)):
        c = comps[j]
        total = 0
        for i in range(j - 1, -1, -1):
            h, (c, _right) = local_energy_iso(comps[i], c)
            total += h
        parts.append(total)
    return tuple(parts)


def energy(path):
    """Energy of a weakly decreasing path (propagation algorithm)."""
    return sum(energy_parts(path))


def energy_lines(path):
    """Line decomposition of the dot diagram, drawn right to left.

    Lines start at the rightmost column still holding unconnected dots; each
    line walks to column 1, choosing partners among unconnected dots by the
    local rule.  Returns a list of (start_column, steps) with steps a list of
    (column, row, winding) ordered leftward.  Columns are 1-based.
    """
    mu = path.shape()
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError("path shape must weakly decrease: %r" % (mu,))
    antisym = path.kind == ANTISYM
    m = len(path)
    remaining = [list(b.coords) for b in path.components]
    lines = []
    for start in range(m, 0, -1):
        while sum(remaining[start - 1]):
            row = next(r for r in range(1, path.n + 1)
                       if remaining[start - 1][r - 1])
            remaining[start - 1][row - 1] -= 1
            steps = []
            cur = row
            for col in range(start - 1, 0, -1):
                r, w = _find_partner(remaining[col - 1], cur, antisym)
                remaining[col - 1][r - 1] -= 1
                steps.append((col, r, w))
                cur = r
            lines.append((start, steps))
    return lines


def energy_elines(path):
    """Energy from the line decomposition; independent of the propagation route.

    E^{(j)} collects, over lines starting in column j or further right, the
    winding steps lying between columns 1 and j.
    """
    lines = energy_lines(path)
    antisym = path.kind == ANTISYM
    total = 0
    for j in range(2, len(path) + 1):
        for start, steps in lines:
            if start < j:
                continue
            for col, _row, w in steps:
                if w and col <= j - 1:
                    total += 1
    return -total if antisym else total


def energy_table(path):
    """Matrix of the accumulated local energies H_{ij} (i<j) for display."""
    comps = path.components
    m = len(comps)
    table = {}
    for j in range(1, m):
        c = comps[j]
        for i in range(j - 1, -1, -1):
            h, (c, _right) = local_energy_iso(comps[i], c)
            table[(i + 1, j + 1)] = h
    return table


def ground_state_path(n, mu):
    """Symmetric path with component j concentrated in row ((j-1) mod n) + 1."""
    mu = tuple(int(x) for x in mu)
    assert mu and all(x > 0 for x in mu)
    comps = []
    for j, deg in enumerate(mu, start=1):
        row = (j - 1) % n + 1
        c = [0] * n
        c[row - 1] = deg
        comps.append(CrystalElement(n, SYM, c))
    return Path(comps)


def _fund_norm(n, i):
    """(Lambda_i | Lambda_i) = i - i^2/n for 0 <= i < n."""
    i = i % n
    return Fraction(i) - Fraction(i * i, n)


def ground_state_energy(n, l, r, mu):
    """Closed form for the minimal energy constant of shape mu at level l.

    mu must be a partition with mu_1 <= l; r picks the classical node the
    reference configuration is based at.
    """
    mu = tuple(int(x) for x in mu)
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError("mu must weakly decrease")
    if mu and mu[0] > l:
        raise ValueError(f"largest part {mu[0]} exceeds the level {l}")
    total = Fraction(0)
    width = mu[0] if mu else 0
    for j in range(1, width + 1):
        col = sum(1 for p in mu if p >= j)
        t = col + r
        total += Fraction(t * t, n) - t + _fund_norm(n, t)
    return total / 2


def affine_weight(path, l, r):
    """(classical weight of lLambda_r + wt p, delta degree -(E(p) - ground state))."""
    from .crystal import ClassicalWeight
    n = path.n
    w = ClassicalWeight.fundamental(n, r, l) + path.weight()
    ebar = ground_state_energy(n, l, r, path.shape())
    return w, -(energy(path) - ebar)
