"""Exact arithmetic in the variable q.

Two containers: LaurentPoly (sparse, exact, exponents may be rational) and
QSeries (dense truncated series).  Coefficients are Python ints throughout;
exponents are Fraction values.  Nothing here ever rounds.
"""

from fractions import Fraction

Rational = Fraction


def _exp(x):
    """Coerce an exponent to Fraction, rejecting floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("exponent must be int or Fraction, got %r" % (x,))


def _exp_text(e):
    if e.denominator == 1:
        return str(e.numerator)
    return "(%d/%d)" % (e.numerator, e.denominator)


def _terms_text(pairs):
    """Render [(exponent, coeff), ...] (ascending) in the compact q notation."""
    if not pairs:
        return "0"
    out = []
    for e, c in pairs:
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            head = "" if a == 1 else str(a)
            body = head + ("q" if e == 1 else "q^" + _exp_text(e))
        out.append((sign, body))
    first_sign, first_body = out[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in out[1:]:
        text += sign + body
    return text


class LaurentPoly:
    """Integer-coefficient polynomial in q and q^-1, stored as {exponent: coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, int):
                    raise TypeError("coefficient %r is not an int" % (c,))
                if c:
                    data[_exp(e)] = c
        self.terms = data

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def q(cls, e=1):
        return cls({e: 1})

    def is_zero(self):
        return not self.terms

    def coeff(self, e):
        return self.terms.get(_exp(e), 0)

    def min_exp(self):
        assert self.terms, "zero polynomial has no min_exp"
        return min(self.terms)

    def max_exp(self):
        assert self.terms, "zero polynomial has no max_exp"
        return max(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        data = dict(self.terms)
        for e, c in other.terms.items():
            s = data.get(e, 0) + c
            if s:
                data[e] = s
            else:
                data.pop(e, None)
        out = LaurentPoly()
        out.terms = data
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly()
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.const(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            out = LaurentPoly()
            out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        data = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = data.get(e, 0) + c1 * c2
                if s:
                    data[e] = s
                else:
                    data.pop(e, None)
        out = LaurentPoly()
        out.terms = data
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        assert isinstance(k, int) and k >= 0
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, delta):
        """Multiply by q^delta."""
        d = _exp(delta)
        out = LaurentPoly()
        out.terms = {e + d: c for e, c in self.terms.items()}
        return out

    def __call__(self, value):
        """Evaluate at a numeric q (Fraction arithmetic)."""
        v = Fraction(value)
        total = Fraction(0)
        for e, c in self.terms.items():
            if e.denominator != 1:
                raise ValueError("cannot evaluate fractional exponent %s" % e)
            total += c * v ** e.numerator
        return total

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        return _terms_text(self.sorted_terms())

    def __repr__(self):
        return "LaurentPoly(%s)" % str(self)

    def to_json(self):
        pairs = []
        for e, c in self.sorted_terms():
            if e.denominator != 1:
                raise ValueError("non-integer exponent %s cannot be serialized" % e)
            pairs.append([e.numerator, str(c)])
        return {"terms": pairs}

    @classmethod
    def from_json(cls, obj):
        return cls({int(e): int(c) for e, c in obj["terms"]})


def _exp_json(e):
    return e.numerator if e.denominator == 1 else "%d/%d" % (e.numerator, e.denominator)


class QSeries:
    """Truncated series: exact coefficients for every exponent <= order.

    Exponents form the ladder min_exp, min_exp+1, ... and coeffs[i] belongs to
    min_exp + i.  min_exp may be a non-integral rational; all exponents of one
    series share its fractional part.
    """

    __slots__ = ("order", "min_exp", "coeffs")

    def __init__(self, order, min_exp=0, coeffs=()):
        self.order = order
        m = _exp(min_exp)
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        while cs and cs[0] == 0:
            cs.pop(0)
            m += 1
        while cs and m + len(cs) - 1 > order:
            cs.pop()
        if not cs:
            m = Fraction(0)
        self.min_exp = m
        self.coeffs = cs

    @classmethod
    def zero(cls, order):
        return cls(order)

    @classmethod
    def one(cls, order):
        return cls(order, 0, [1])

    @classmethod
    def from_poly(cls, poly, order):
        if poly.is_zero():
            return cls(order)
        m = poly.min_exp()
        top = min(poly.max_exp(), order)
        n = int(top - m) + 1 if top >= m else 0
        cs = [0] * n
        for e, c in poly.terms.items():
            if e > order:
                continue
            off = e - m
            if off.denominator != 1:
                raise ValueError("mixed exponent lattice in %r" % poly)
            cs[off.numerator] = c
        return cls(order, m, cs)

    def is_zero(self):
        return not self.coeffs

    def coeff(self, e):
        e = _exp(e)
        assert e <= self.order, "exponent beyond truncation order"
        off = e - self.min_exp
        if off.denominator != 1 or off < 0 or off.numerator >= len(self.coeffs):
            return 0
        return self.coeffs[off.numerator]

    def items(self):
        return [(self.min_exp + i, c) for i, c in enumerate(self.coeffs) if c]

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.order == other.order and self.min_exp == other.min_exp
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.order, self.min_exp, tuple(self.coeffs)))

    def matches(self, other, through=None):
        """Coefficient agreement on the window of exponents <= through (and both orders)."""
        top = min(self.order, other.order)
        if through is not None:
            top = min(top, _exp(through))
        for e, c in self.items():
            if e <= top and other.coeff(e) != c:
                return False
        for e, c in other.items():
            if e <= top and self.coeff(e) != c:
                return False
        return True

    def __add__(self, other):
        if isinstance(other, int):
            other = QSeries(self.order, 0, [other])
        order = min(self.order, other.order)
        if self.is_zero():
            return QSeries(order, other.min_exp, other.coeffs)
        if other.is_zero():
            return QSeries(order, self.min_exp, self.coeffs)
        d = other.min_exp - self.min_exp
        if d.denominator != 1:
            raise ValueError("incompatible exponent ladders: %s vs %s"
                             % (self.min_exp, other.min_exp))
        d = d.numerator
        m = self.min_exp if d >= 0 else other.min_exp
        a = self.coeffs if d >= 0 else other.coeffs
        b = other.coeffs if d >= 0 else self.coeffs
        off = abs(d)
        n = max(len(a), off + len(b))
        cs = a + [0] * (n - len(a))
        for i, c in enumerate(b):
            cs[off + i] += c
        return QSeries(order, m, cs)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.order, self.min_exp, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = QSeries(self.order, 0, [other])
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(self.order, self.min_exp, [c * other for c in self.coeffs])
        if isinstance(other, LaurentPoly):
            other = QSeries.from_poly(other, self.order - min(0, int(self.min_exp)))
        if self.is_zero() or other.is_zero():
            return QSeries(min(self.order, other.order))
        # each factor is unknown beyond its order, so the product is reliable
        # only up to min(order1 + min_exp2, order2 + min_exp1)
        order = min(self.order + other.min_exp, other.order + self.min_exp)
        m = self.min_exp + other.min_exp
        n = int(min(order - m, len(self.coeffs) + len(other.coeffs) - 2)) + 1
        if n <= 0:
            return QSeries(order)
        cs = [0] * n
        for i, a in enumerate(self.coeffs):
            if a == 0 or i >= n:
                continue
            top = min(len(other.coeffs), n - i)
            for j in range(top):
                b = other.coeffs[j]
                if b:
                    cs[i + j] += a * b
        return QSeries(order, m, cs)

    __rmul__ = __mul__

    def shift(self, delta):
        """Multiply by q^delta (order moves with the shift)."""
        d = _exp(delta)
        return QSeries(self.order + d, self.min_exp + d, self.coeffs)

    def truncate(self, order):
        assert order <= self.order, "cannot extend a truncated series"
        return QSeries(order, self.min_exp, self.coeffs)

    def __str__(self):
        body = _terms_text(self.items())
        return "%s + O(q^%s)" % (body, _exp_text(_exp(self.order) + 1))

    def __repr__(self):
        return "QSeries(%s)" % str(self)

    def to_json(self):
        return {
            "terms": [[_exp_json(e), str(c)] for e, c in self.items()],
            "order": self.order,
            "min_exp": _exp_json(self.min_exp),
        }

    @classmethod
    def from_json(cls, obj):
        m = Fraction(str(obj["min_exp"]))
        order = int(obj["order"])
        out = cls(order)
        for e, c in obj["terms"]:
            out = out + cls(order, Fraction(str(e)), [int(c)])
        return out


def shift(x, delta):
    """q^delta * x for either container."""
    return x.shift(delta)


_qbin_cache = {}


def qbinomial(m, k):
    """Gaussian binomial coefficient [m, k] as a LaurentPoly (zero unless 0<=k<=m)."""
    if not (isinstance(m, int) and isinstance(k, int)):
        raise TypeError("qbinomial wants ints")
    if k < 0 or m < 0 or k > m:
        return LaurentPoly.zero()
    if k == 0 or k == m:
        return LaurentPoly.one()
    key = (m, min(k, m - k))
    got = _qbin_cache.get(key)
    if got is None:
        kk = key[1]
        # q-Pascal: [m,k] = [m-1,k-1] + q^k [m-1,k]
        got = qbinomial(m - 1, kk - 1) + qbinomial(m - 1, kk).shift(kk)
        _qbin_cache[key] = got
    return got


def qpochhammer(m):
    """(q)_m = prod_{i=1..m} (1 - q^i)."""
    assert m >= 0
    out = LaurentPoly.one()
    for i in range(1, m + 1):
        out = out * LaurentPoly({0: 1, i: -1})
    return out


def qint(m):
    """[m] = 1 + q + ... + q^{m-1}."""
    assert m >= 0
    return LaurentPoly({i: 1 for i in range(m)})


def inv_qpochhammer_series(m, order):
    """1/(q)_m as a QSeries: partitions with parts <= m."""
    assert m >= 0 and order >= 0
    cs = [1] + [0] * order
    for part in range(1, m + 1):
        for k in range(part, order + 1):
            cs[k] += cs[k - part]
    return QSeries(order, 0, cs)

def inv_pochhammer_series(power, order):
    """1/(q)_infinity^power as a QSeries (parts of any size, `power` colors)."""
    assert power >= 0 and order >= 0
    cs = [1] + [0] * order
    for _color in range(power):
        for part in range(1, order + 1):
            for k in range(part, order + 1):
                cs[k] += cs[k - part]
    return QSeries(order, 0, cs)
