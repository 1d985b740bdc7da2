"""Dense univariate polynomials over a tower level.

Large products go through Kronecker substitution: the coefficients (and the
tower generators inside them) are packed into one big integer, multiplied
with GMP, and unpacked.  Small products use the schoolbook routine of the
tower.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import NotASquare, NotDivisible, ValidationError
from .tower import AlgNum, Tower, _trim, adjoin, format_poly

try:
    import gmpy2

    def _bigmul(a, b):
        if a is b:
            return int(gmpy2.mpz(a) ** 2)
        return int(gmpy2.mpz(a) * gmpy2.mpz(b))

except ImportError:  # pragma: no cover
    def _bigmul(a, b):
        return a * b


NEG_INF = float("-inf")

QQ = Tower()

_SCHOOLBOOK_CUTOFF = 6


class UPoly:
    """Polynomial in one variable; ``coeffs`` are top-level raws of ``tower``."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower, coeffs=()):
        self.tower = tower
        self.coeffs = _trim(coeffs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def x(cls, tower=QQ):
        return cls(tower, (tower.zero(), tower.one()))

    @classmethod
    def const(cls, tower, c):
        if isinstance(c, AlgNum):
            return cls(tower, (_lift_num(c, tower),))
        return cls(tower, (tower.rational(c),))

    @classmethod
    def from_rationals(cls, coeffs, tower=QQ):
        """Build from rational coefficients, constant term first."""
        return cls(tower, [tower.rational(c) for c in coeffs])

    @classmethod
    def monomial(cls, n, c=1, tower=QQ):
        return cls(tower, [tower.zero()] * n + [tower.rational(c)])

    # -- basic properties ----------------------------------------------------

    @property
    def level(self):
        return self.tower.height

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def lc(self):
        return AlgNum(self.tower, self.coeffs[-1] if self.coeffs else self.tower.zero())

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return AlgNum(self.tower, self.coeffs[i])
        return AlgNum(self.tower, self.tower.zero())

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.tower.one()

    def as_rationals(self):
        """Coefficients as Fractions, or None if some coefficient is irrational."""
        out = []
        for c in self.coeffs:
            q = self.tower.as_rational(c)
            if q is None:
                return None
            out.append(q)
        return out

    # -- tower movement --------------------------------------------------------

    def lift(self, tower):
        """Re-express over an extension of this polynomial's tower."""
        if tower == self.tower:
            return self
        if not self.tower.is_prefix_of(tower):
            raise ValidationError("target tower does not extend the polynomial's tower")
        h = self.tower.height
        return UPoly(tower, [tower.embed(c, h) for c in self.coeffs])

    def project(self, tower):
        """Image in a branch tower obtained by splitting this one."""
        return UPoly(tower, [tower.project(c, self.tower) for c in self.coeffs])

    def _common(self, other):
        if isinstance(other, UPoly):
            if other.tower == self.tower:
                return self, other
            if other.tower.is_prefix_of(self.tower):
                return self, other.lift(self.tower)
            if self.tower.is_prefix_of(other.tower):
                return self.lift(other.tower), other
            raise ValidationError("polynomials over unrelated towers")
        if isinstance(other, AlgNum):
            if other.tower.is_prefix_of(self.tower):
                return self, UPoly.const(self.tower, other)
            if self.tower.is_prefix_of(other.tower):
                up = self.lift(other.tower)
                return up, UPoly.const(up.tower, other)
            raise ValidationError("scalar over an unrelated tower")
        if isinstance(other, (int, Fraction)):
            return self, UPoly.const(self.tower, other)
        return None, None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return UPoly(a.tower, a.tower.p_add(a.coeffs, b.coeffs, a.level))

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.tower, self.tower.p_neg(self.coeffs, self.level))

    def __sub__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return UPoly(a.tower, a.tower.p_sub(a.coeffs, b.coeffs, a.level))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return UPoly(a.tower, _mul(a.tower, a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        if len(self.coeffs) == 1:
            return UPoly(self.tower, (self.tower.power(self.coeffs[0], e, self.level),))
        if self.is_monomial():
            # c*x^n
            n = len(self.coeffs) - 1
            c = self.tower.power(self.coeffs[-1], e, self.level)
            return UPoly(self.tower, [self.tower.zero()] * (n * e) + [c])
        result = None
        base = self.coeffs
        while e:
            if e & 1:
                result = base if result is None else _mul(self.tower, result, base)
            e >>= 1
            if e:
                base = _mul(self.tower, base, base)
        return UPoly(self.tower, (self.tower.one(),) if result is None else result)

    def is_monomial(self):
        return bool(self.coeffs) and not any(self.coeffs[:-1])

    def scale(self, c):
        a, b = self._common(c)
        if not b.coeffs:
            return UPoly(a.tower)
        return UPoly(a.tower, a.tower.p_scale(a.coeffs, b.coeffs[0], a.level))

    def shift(self, n):
        """Multiply by x^n."""
        if not self.coeffs:
            return self
        return UPoly(self.tower, [self.tower.zero()] * n + list(self.coeffs))

    def derivative(self):
        return UPoly(self.tower, self.tower.p_deriv(self.coeffs, self.level))

    def __call__(self, at):
        """Evaluate at an AlgNum/rational, or compose with a UPoly."""
        if isinstance(at, UPoly):
            return self.compose(at)
        if isinstance(at, AlgNum) and at.tower != self.tower:
            p, c = self._common(at)
            return p(AlgNum(p.tower, c.coeffs[0] if c.coeffs else p.tower.zero()))
        t, h = self.tower, self.level
        v = at.raw if isinstance(at, AlgNum) else t.rational(at)
        acc = t.zero()
        for c in reversed(self.coeffs):
            acc = t.add(t.mul(acc, v, h), c, h)
        return AlgNum(t, acc)

    def compose(self, q):
        p, q = self._common(q)
        acc = UPoly(p.tower)
        for c in reversed(p.coeffs):
            acc = acc * q + UPoly(p.tower, (c,))
        return acc

    def divmod(self, other):
        a, b = self._common(other)
        t = a.tower
        if b.is_monomial() and b.coeffs[-1] == t.one():
            n = len(b.coeffs) - 1
            return UPoly(t, a.coeffs[n:]), UPoly(t, a.coeffs[:n])
        q, r = t.p_divmod(a.coeffs, b.coeffs, a.level)
        return UPoly(t, q), UPoly(t, r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        return UPoly(self.tower, self.tower.p_monic(self.coeffs, self.level))

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, UPoly):
            if self.tower != other.tower:
                try:
                    a, b = self._common(other)
                except ValidationError:
                    return False
                return a.coeffs == b.coeffs
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, AlgNum)):
            a, b = self._common(other)
            return a.coeffs == b.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def format(self, var="x"):
        return format_poly(self.coeffs, self.tower, var)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"UPoly({self.format()})"


def _lift_num(c, tower):
    if c.tower == tower:
        return c.raw
    if not c.tower.is_prefix_of(tower):
        raise ValidationError("scalar over an unrelated tower")
    return tower.embed(c.raw, c.tower.height)


# -- Kronecker substitution ------------------------------------------------------

def _mul(tower, a, b):
    if not a or not b:
        return ()
    if min(len(a), len(b)) <= _SCHOOLBOOK_CUTOFF:
        return tower.p_mul(a, b, tower.height)
    return _kron_mul(tower, a, b)


def _layout(tower):
    radices = [2 * tower.degree(k) - 1 for k in range(1, tower.height + 1)]
    strides = [1]
    for r in radices:
        strides.append(strides[-1] * r)
    return radices, strides


def _flatten(poly, tower, strides):
    h = tower.height
    block = strides[-1]
    vals = [0] * (len(poly) * block)

    def put(a, k, off):
        if k == 0:
            vals[off] = a
            return
        st = strides[k - 1]
        for e, c in enumerate(a):
            if c:
                put(c, k - 1, off + e * st)

    for i, c in enumerate(poly):
        if c:
            put(c, h, i * block)
    den = math.lcm(*{v.denominator for v in vals if v}) if any(vals) else 1
    if den == 1:
        ints = [int(v) for v in vals]
    else:
        ints = [v.numerator * (den // v.denominator) if v else 0 for v in vals]
    return ints, den


def _pack(ints, nbytes):
    pos = b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in ints)
    neg = b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in ints)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def int_poly_mul(a, b):
    """Product of two integer coefficient lists via one big-integer product."""
    if not a or not b:
        return []
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    if not ma or not mb:
        return [0] * (len(a) + len(b) - 1)
    bits = ma.bit_length() + mb.bit_length() + min(len(a), len(b)).bit_length() + 2
    nbytes = (bits + 7) // 8
    pa = _pack(a, nbytes)
    prod = _bigmul(pa, pa) if a is b else _bigmul(pa, _pack(b, nbytes))
    n = len(a) + len(b) - 1
    half = 1 << (8 * nbytes - 1)
    bias = int.from_bytes(half.to_bytes(nbytes, "little") * n, "little")
    data = (prod + bias).to_bytes(nbytes * n, "little")
    return [int.from_bytes(data[i * nbytes:(i + 1) * nbytes], "little") - half for i in range(n)]


def _kron_mul(tower, a, b):
    radices, strides = _layout(tower)
    block = strides[-1]
    A, da = _flatten(a, tower, strides)
    B, db = (A, da) if a is b else _flatten(b, tower, strides)
    C = int_poly_mul(A, A if a is b else B)
    den = da * db
    h = tower.height

    def get(off, k):
        if k == 0:
            v = C[off]
            if not v or den == 1:
                return v
            return Fraction(v, den)
        st = strides[k - 1]
        return tower.reduce([get(off + e * st, k - 1) for e in range(radices[k - 1])], k)

    n = len(a) + len(b) - 1
    return [get(i * block, h) for i in range(n)]


# -- spec-level operations ---------------------------------------------------

def exact_div(p, q):
    """Quotient ``r`` with ``r*q == p``; NotDivisible otherwise."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    quo, rem = p.divmod(q)
    if not rem.is_zero():
        raise NotDivisible(f"remainder {rem} is nonzero")
    return quo


def gcd_monic(p, q):
    """Monic generator of the ideal (p, q).

    May raise ZeroDivisor when the tower is reducible; callers split and retry.
    """
    p, q = p._common(q)
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials")
    return UPoly(p.tower, p.tower.p_gcd(p.coeffs, q.coeffs, p.level))


def radical_and_d0(p):
    """Squarefree part (monic) and its degree, the number of distinct roots."""
    if p.is_zero():
        raise ValueError("radical of the zero polynomial")
    if p.is_constant():
        return UPoly.const(p.tower, 1), 0
    g = gcd_monic(p, p.derivative())
    rad = exact_div(p, g).monic()
    return rad, rad.degree()


def is_proportional(p, q):
    """The constant ``lam`` with ``p == lam*q``, or None."""
    p, q = p._common(q)
    if p.is_zero():
        return AlgNum(p.tower, p.tower.zero())
    if q.is_zero() or p.degree() != q.degree():
        return None
    lam = p.lc() * q.lc().inv()
    if p == q.scale(lam):
        return lam
    return None


def _fresh_name(tower, stem="s"):
    i = 1
    while f"{stem}{i}" in tower.names:
        i += 1
    return f"{stem}{i}"


def _rational_sqrt(q):
    if q <= 0:
        return None
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def poly_sqrt(p, name=None):
    """Square root ``g`` of ``p`` and the tower it lives in.

    When the leading coefficient is not a rational square, the tower is
    extended by a root of ``y^2 - lc``.  The leading coefficient of ``g`` is
    the positive root when it is rational.
    """
    if p.is_zero():
        raise ValueError("square root of the zero polynomial")
    d = p.degree()
    if d % 2:
        raise NotASquare(f"odd degree {d}")
    tower = p.tower
    lc = p.lc()
    q = lc.as_rational()
    root = _rational_sqrt(q) if q is not None else None
    if root is not None:
        s = tower.rational(root)
    else:
        y = UPoly.x(tower)
        tower = adjoin(tower, name or _fresh_name(tower), y * y - UPoly.const(tower, lc))
        p = p.lift(tower)
        s = tower.generator(tower.height)
    t, h = tower, tower.height
    n = d // 2
    coeffs = p.coeffs
    g = [t.zero()] * (n + 1)
    g[n] = s
    inv2s = t.inv(t.scale(s, 2, h), h)
    for k in range(1, n + 1):
        # coefficient of x^(2n-k): sum of g[i]*g[j] with i + j = 2n - k
        acc = coeffs[2 * n - k]
        for i in range(n - k + 1, n + 1):
            j = 2 * n - k - i
            if n - k < j <= n and j != n - k:
                acc = t.sub(acc, t.mul(g[i], g[j], h), h)
        g[n - k] = t.mul(acc, inv2s, h)
    root_poly = UPoly(t, g)
    if root_poly * root_poly != p:
        raise NotASquare("square of the candidate root differs from the input")
    return root_poly, t
