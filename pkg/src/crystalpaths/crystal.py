"""Crystal elements of the two classical families over affine sl_n and their
tensor-product paths.

An element is a vector of row multiplicities (x_1, ..., x_n).  The symmetric
family allows any nonnegative multiplicities of a fixed total degree; the
antisymmetric family allows 0/1 entries with degree < n.  Operator index i
runs over 0, 1, ..., n-1; index i moves a unit from slot i to slot i+1, with
i = 0 wrapping from slot n to slot 1.
"""

from fractions import Fraction

SYM = "sym"
ANTISYM = "antisym"


def _move_slots(n, i):
    """(source, target) slots of the lowering operator at index i, 1-based."""
    assert 0 <= i < n
    if i == 0:
        return n, 1
    return i, i + 1


class CrystalElement:
    """One tensor factor: row multiplicities with a fixed kind."""

    __slots__ = ("n", "kind", "coords")

    def __init__(self, n, kind, coords):
        coords = tuple(int(x) for x in coords)
        if len(coords) != n:
            raise ValueError("need %d coordinates, got %r" % (n, coords))
        if any(x < 0 for x in coords):
            raise ValueError("negative multiplicity in %r" % (coords,))
        if kind == ANTISYM:
            if any(x > 1 for x in coords):
                raise ValueError("antisymmetric coordinates must be 0/1")
            if sum(coords) >= n:
                raise ValueError("antisymmetric degree must be < n")
        elif kind != SYM:
            raise ValueError("kind must be %r or %r" % (SYM, ANTISYM))
        self.n = n
        self.kind = kind
        self.coords = coords

    def degree(self):
        return sum(self.coords)

    def epsilon(self, i):
        s, t = _move_slots(self.n, i)
        if self.kind == SYM:
            return self.coords[t - 1]
        return 1 if (self.coords[t - 1] == 1 and self.coords[s - 1] == 0) else 0

    def phi(self, i):
        s, t = _move_slots(self.n, i)
        if self.kind == SYM:
            return self.coords[s - 1]
        return 1 if (self.coords[s - 1] == 1 and self.coords[t - 1] == 0) else 0

    def f(self, i):
        """Lowering operator; None encodes the crystal zero."""
        if self.phi(i) == 0:
            return None
        s, t = _move_slots(self.n, i)
        c = list(self.coords)
        c[s - 1] -= 1
        c[t - 1] += 1
        return CrystalElement(self.n, self.kind, c)

    def e(self, i):
        """Raising operator; None encodes the crystal zero."""
        if self.epsilon(i) == 0:
            return None
        s, t = _move_slots(self.n, i)
        c = list(self.coords)
        c[t - 1] -= 1
        c[s - 1] += 1
        return CrystalElement(self.n, self.kind, c)

    def weight(self):
        # coefficient of the j-th fundamental weight is x_j - x_{j+1}, cyclically
        n = self.n
        x = self.coords
        a = [x[n - 1] - x[0]] + [x[j - 1] - x[j] for j in range(1, n)]
        return ClassicalWeight(a)

    def word(self):
        """Letters with multiplicity, e.g. (1,0,2) -> "133"."""
        return "".join(str(r + 1) * c for r, c in enumerate(self.coords)) or "-"

    def __eq__(self, other):
        return (isinstance(other, CrystalElement) and self.n == other.n
                and self.kind == other.kind and self.coords == other.coords)

    def __hash__(self):
        return hash((self.n, self.kind, self.coords))

    def __repr__(self):
        return "CrystalElement(%d, %r, %r)" % (self.n, self.kind, self.coords)


def element_from_word(word, n, kind=SYM):
    """Inverse of CrystalElement.word: "133" -> (1,0,2)."""
    c = [0] * n
    for ch in word:
        if ch == "-":
            continue
        r = int(ch)
        if not 1 <= r <= n:
            raise ValueError("letter %s out of range 1..%d" % (ch, n))
        c[r - 1] += 1
    return CrystalElement(n, kind, c)


def crystal_elements(n, kind, degree):
    """All elements of the degree-`degree` crystal, lexicographic by coords."""
    out = []

    def rec(slot, left, prefix):
        if slot == n:
            if left == 0:
                out.append(CrystalElement(n, kind, prefix))
            return
        top = left if kind == SYM else min(left, 1)
        for x in range(top + 1):
            rec(slot + 1, left - x, prefix + [x])

    if kind == ANTISYM and degree >= n:
        return []
    rec(0, degree, [])
    return out


class ClassicalWeight:
    """Integer combination of the classical fundamental weights, index 0..n-1."""

    __slots__ = ("a",)

    def __init__(self, coeffs):
        self.a = tuple(int(c) for c in coeffs)

    @classmethod
    def fundamental(cls, n, i, mult=1):
        a = [0] * n
        a[i % n] = mult
        return cls(a)

    def n(self):
        return len(self.a)

    def level(self):
        return sum(self.a)

    def pair(self, i):
        """<h_i, weight>."""
        return self.a[i % len(self.a)]

    def __add__(self, other):
        assert len(self.a) == len(other.a)
        return ClassicalWeight(x + y for x, y in zip(self.a, other.a))

    def __sub__(self, other):
        assert len(self.a) == len(other.a)
        return ClassicalWeight(x - y for x, y in zip(self.a, other.a))

    def is_dominant(self):
        return all(c >= 0 for c in self.a)

    def __eq__(self, other):
        return isinstance(other, ClassicalWeight) and self.a == other.a

    def __hash__(self):
        return hash(self.a)

    def __str__(self):
        pieces = []
        for i, c in enumerate(self.a):
            if c == 0:
                continue
            head = "" if c == 1 else ("-" if c == -1 else str(c))
            pieces.append("%sL%d" % (head, i))
        return "+".join(pieces).replace("+-", "-") or "0"

    def __repr__(self):
        return "ClassicalWeight(%r)" % (self.a,)


class Path:
    """Tensor product b_1 (x) ... (x) b_m, all factors over the same n and kind."""

    __slots__ = ("components",)

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise ValueError("empty path")
        n, kind = components[0].n, components[0].kind
        for b in components:
            if b.n != n or b.kind != kind:
                raise ValueError("mixed factors in path")
        self.components = components

    @property
    def n(self):
        return self.components[0].n

    @property
    def kind(self):
        return self.components[0].kind

    def shape(self):
        return tuple(b.degree() for b in self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, k):
        return self.components[k]

    def weight(self):
        w = ClassicalWeight([0] * self.n)
        for b in self.components:
            w = w + b.weight()
        return w

    def weight_composition(self):
        """Total row multiplicities (lambda_1, ..., lambda_n)."""
        n = self.n
        out = [0] * n
        for b in self.components:
            for j in range(n):
                out[j] += b.coords[j]
        return tuple(out)

    def epsilon(self, i):
        eps, phi = 0, None
        for b in self.components:
            eb, pb = b.epsilon(i), b.phi(i)
            if phi is None:
                eps, phi = eb, pb
            else:
                eps = eps + max(0, eb - phi)
                phi = pb + max(0, phi - eb)
        return eps

    def phi(self, i):
        eps, phi = 0, None
        for b in self.components:
            eb, pb = b.epsilon(i), b.phi(i)
            if phi is None:
                eps, phi = eb, pb
            else:
                eps = eps + max(0, eb - phi)
                phi = pb + max(0, phi - eb)
        return phi

    def _prefix_phi(self, i, k):
        """phi_i of the leftmost k factors."""
        eps, phi = 0, None
        for b in self.components[:k]:
            eb, pb = b.epsilon(i), b.phi(i)
            if phi is None:
                eps, phi = eb, pb
            else:
                eps = eps + max(0, eb - phi)
                phi = pb + max(0, phi - eb)
        return phi

    def f(self, i):
        """Tensor-rule lowering: acts on the left factor when phi > eps."""
        k = len(self.components)
        while k > 1:
            if self._prefix_phi(i, k - 1) > self.components[k - 1].epsilon(i):
                k -= 1
            else:
                break
        target = self.components[k - 1]
        moved = target.f(i)
        if moved is None:
            return None
        comps = list(self.components)
        comps[k - 1] = moved
        return Path(comps)

    def e(self, i):
        k = len(self.components)
        while k > 1:
            if self._prefix_phi(i, k - 1) >= self.components[k - 1].epsilon(i):
                k -= 1
            else:
                break
        target = self.components[k - 1]
        moved = target.e(i)
        if moved is None:
            return None
        comps = list(self.components)
        comps[k - 1] = moved
        return Path(comps)

    def word(self):
        return ",".join(b.word() for b in self.components)

    def __eq__(self, other):
        return isinstance(other, Path) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "Path(%s)" % self.word()

    def to_json(self):
        return {"kind": self.kind, "n": self.n,
                "components": [list(b.coords) for b in self.components]}

    @classmethod
    def from_json(cls, obj):
        n, kind = int(obj["n"]), obj["kind"]
        return cls([CrystalElement(n, kind, c) for c in obj["components"]])


def path_from_words(words, n, kind=SYM):
    """Build a path from comma-joined letter words, e.g. "11,22,3,1"."""
    if isinstance(words, str):
        words = words.split(",")
    return Path([element_from_word(w, n, kind) for w in words])


def path_apply(path, op, i):
    """Apply "e" or "f" at index i; None is the crystal zero."""
    if op == "e":
        return path.e(i)
    if op == "f":
        return path.f(i)
    raise ValueError("op must be 'e' or 'f'")


def weight_to_composition(weight, size):
    """Composition (lambda_1..lambda_n) with differences from `weight` and total `size`.

    Returns None when no integer composition exists (size incompatible with
    the weight's class) or when some entry would be negative.
    """
    n = weight.n()
    tails = [0] * (n + 1)
    for i in range(n - 1, 0, -1):
        tails[i] = tails[i + 1] + weight.pair(i)
    rem = size - sum(tails[1:n + 1])
    if rem % n != 0:
        return None
    c = rem // n
    comp = tuple(tails[i] + c for i in range(1, n + 1))
    if any(x < 0 for x in comp):
        return None
    return comp


def composition_to_weight(comp):
    """Classical weight with <h_i,.> = comp_i - comp_{i+1} and level-0 affine part.

    The index-0 coefficient is chosen so all fundamental-weight coefficients
    sum to zero, matching the weight of any path with this composition.
    """
    n = len(comp)
    a = [0] * n
    for i in range(1, n):
        a[i] = comp[i - 1] - comp[i]
    a[0] = -sum(a[1:])
    return ClassicalWeight(a)
