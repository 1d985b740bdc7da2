"""Exact arithmetic in towers Q = R_0 < R_1 < ... < R_h of simple extensions.

Level k is R_k = R_{k-1}[g_k]/(m_k) with m_k monic.  Elements are stored as
"raw" values:

* level 0: a rational, ``int`` or ``Fraction``;
* level k >= 1: a tuple of level k-1 raws, constant term first, of length
  at most ``deg m_k`` and without trailing zeros.

Every zero raw is falsy (``0`` or ``()``), every nonzero raw is truthy, and
canonical raws compare equal iff they represent the same ring element.

Moduli need not be irreducible.  When an inversion hits a zero divisor,
:class:`~trinomial.errors.ZeroDivisor` reports a proper factor of the
offending modulus and the caller may :func:`split` the tower (dynamic
evaluation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateModulus, NotAFactor, ValidationError, ZeroDivisor


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Level:
    name: str
    modulus: tuple  # raws at the level below, constant first, monic

    @property
    def degree(self):
        return len(self.modulus) - 1


@dataclass(frozen=True)
class Tower:
    """Immutable chain of extensions; all raw arithmetic is done through it.

    ``replaced`` records generators whose requested defining polynomial was
    not squarefree and got replaced by its squarefree part.
    """

    levels: tuple = ()
    replaced: tuple = field(default=(), compare=False)

    # -- structure ---------------------------------------------------------

    @property
    def height(self):
        return len(self.levels)

    @property
    def names(self):
        return tuple(lv.name for lv in self.levels)

    def degree(self, k):
        return self.levels[k - 1].degree

    def modulus(self, k):
        return self.levels[k - 1].modulus

    def truncate(self, k):
        if k == self.height:
            return self
        return Tower(self.levels[:k], tuple(r for r in self.replaced if r[0] in self.names[:k]))

    def is_prefix_of(self, other):
        return self.levels == other.levels[: self.height]

    def __str__(self):
        if not self.levels:
            return "QQ"
        parts = [f"{lv.name}: {format_poly(lv.modulus, self, lv.name, i)}" for i, lv in enumerate(self.levels)]
        return "QQ[" + "; ".join(parts) + "]"

    # -- constants ---------------------------------------------------------

    def one(self, k=None):
        k = self.height if k is None else k
        r = 1
        for _ in range(k):
            r = (r,)
        return r

    def zero(self, k=None):
        k = self.height if k is None else k
        return 0 if k == 0 else ()

    def embed(self, a, frm, to=None):
        """Lift a raw from level ``frm`` to level ``to`` (default: top)."""
        to = self.height if to is None else to
        for _ in range(frm, to):
            a = (a,) if a else ()
        return a

    def rational(self, q, k=None):
        k = self.height if k is None else k
        q = Fraction(q)
        if q.denominator == 1:
            q = q.numerator
        return self.embed(q, 0, k)

    def generator(self, k):
        """The raw of g_k at level k."""
        n = self.degree(k)
        if n >= 2:
            return (self.zero(k - 1), self.one(k - 1))
        # degenerate level: g_k equals minus the constant term of its modulus
        return _trim((self.neg(self.modulus(k)[0], k - 1),))

    def as_rational(self, a, k=None):
        """Return ``a`` as a Fraction if it lies in Q, else ``None``."""
        k = self.height if k is None else k
        while k > 0:
            if len(a) > 1:
                return None
            a = a[0] if a else 0
            k -= 1
        return Fraction(a)

    # -- ring operations on raws --------------------------------------------

    def add(self, a, b, k):
        if k == 0:
            return a + b
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = self.add(out[i], c, k - 1)
        return _trim(out)

    def neg(self, a, k):
        if k == 0:
            return -a
        return tuple(self.neg(c, k - 1) for c in a)

    def sub(self, a, b, k):
        return self.add(a, self.neg(b, k), k)

    def scale(self, a, q, k):
        """Multiply a raw by a rational."""
        if not q:
            return self.zero(k)
        if k == 0:
            return a * q
        return tuple(self.scale(c, q, k - 1) for c in a)

    def mul(self, a, b, k):
        if k == 0:
            return a * b
        if not a or not b:
            return ()
        return self.reduce(self.p_mul(a, b, k - 1), k)

    def power(self, a, e, k):
        result = self.one(k)
        while e:
            if e & 1:
                result = self.mul(result, a, k)
            e >>= 1
            if e:
                a = self.mul(a, a, k)
        return result

    def reduce(self, coeffs, k):
        """Canonical level-k raw of a polynomial in g_k (coefficients canonical at k-1)."""
        m = self.modulus(k)
        n = len(m) - 1
        coeffs = list(coeffs)
        km1 = k - 1
        for i in range(len(coeffs) - 1, n - 1, -1):
            c = coeffs[i]
            if not c:
                continue
            base = i - n
            for j in range(n):
                if m[j]:
                    coeffs[base + j] = self.sub(coeffs[base + j], self.mul(c, m[j], km1), km1)
            coeffs[i] = self.zero(km1)
        return _trim(coeffs[:n])

    def inv(self, a, k):
        """Inverse of a nonzero raw; raises ZeroDivisor on a zero divisor."""
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if k == 0:
            return 1 / Fraction(a)
        km1 = k - 1
        r0, r1 = list(self.modulus(k)), list(a)
        s0, s1 = [], [self.one(km1)]
        while r1:
            q, r = self.p_divmod(r0, r1, km1)
            r0, r1 = r1, r
            s0, s1 = s1, self.p_sub(s0, self.p_mul(q, s1, km1), km1)
        if len(r0) > 1:
            raise ZeroDivisor(self, k, self.p_monic(r0, km1))
        c = self.inv(r0[0], km1)
        return self.reduce(self.p_scale(s0, c, km1), k)

    def is_unit(self, a, k):
        try:
            self.inv(a, k)
        except (ZeroDivisor, ZeroDivisionError):
            return False
        return True

    # -- dense polynomials with coefficients at level L ----------------------

    def p_add(self, a, b, L):
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = self.add(out[i], c, L)
        return list(_trim(out))

    def p_neg(self, a, L):
        return [self.neg(c, L) for c in a]

    def p_sub(self, a, b, L):
        return self.p_add(a, self.p_neg(b, L), L)

    def p_scale(self, a, c, L):
        if not c:
            return []
        return list(_trim(self.mul(x, c, L) for x in a))

    def p_mul(self, a, b, L):
        if not a or not b:
            return []
        out = [self.zero(L)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = self.add(out[i + j], self.mul(x, y, L), L)
        return list(_trim(out))

    def p_divmod(self, a, b, L):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        a = list(a)
        nb = len(b) - 1
        lc = b[-1]
        one = self.one(L)
        lc_inv = None if lc == one else self.inv(lc, L)
        if len(a) <= nb:
            return [], list(_trim(a))
        q = [self.zero(L)] * (len(a) - nb)
        for i in range(len(a) - 1, nb - 1, -1):
            c = a[i]
            if not c:
                continue
            if lc_inv is not None:
                c = self.mul(c, lc_inv, L)
            q[i - nb] = c
            base = i - nb
            for j in range(nb + 1):
                if b[j]:
                    a[base + j] = self.sub(a[base + j], self.mul(c, b[j], L), L)
        return list(_trim(q)), list(_trim(a[:nb]))

    def p_monic(self, a, L):
        if not a or a[-1] == self.one(L):
            return list(a)
        return self.p_scale(a, self.inv(a[-1], L), L)

    def p_deriv(self, a, L):
        return list(_trim(self.scale(c, i, L) for i, c in enumerate(a) if i))

    def p_gcd(self, a, b, L):
        a, b = list(_trim(a)), list(_trim(b))
        if L == 0 and a and b:
            return _rational_gcd(a, b)
        while b:
            _, r = self.p_divmod(a, b, L)
            a, b = b, r
        return self.p_monic(a, L)

    # -- moving raws between towers -----------------------------------------

    def project(self, a, src, k=None):
        """Image in this tower of a raw of ``src`` (same shape, moduli reduced)."""
        k = self.height if k is None else k
        if k == 0:
            return a
        return self.reduce([self.project(c, src, k - 1) for c in a], k)


def _primitive(coeffs):
    """Integer polynomial with content 1 and positive leading coefficient."""
    den = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _rational_gcd(a, b):
    """Monic gcd over Q by primitive pseudo-remainders (no fraction growth)."""
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        lb, nb = b[-1], len(b) - 1
        r = list(a)
        while len(r) > nb:
            lr, shift = r[-1], len(r) - 1 - nb
            r = [c * lb for c in r]
            for j, c in enumerate(b):
                r[shift + j] -= lr * c
            r = list(_trim(r))
        if not r:
            break
        a, b = b, _primitive(r)
    if len(b) == 1:
        return [1]
    lc = b[-1]
    return [Fraction(c, lc) if c % lc else c // lc for c in b]


# -- construction of towers -------------------------------------------------

def adjoin(tower, name, defining):
    """Extend ``tower`` by a root of ``defining`` (a UPoly over ``tower``).

    A non-squarefree defining polynomial is replaced by its squarefree part
    and the substitution is recorded in ``Tower.replaced``.
    """
    if name in tower.names:
        raise ValidationError(f"generator {name!r} already declared")
    coeffs = _coeffs_over(tower, defining)
    L = tower.height
    if len(coeffs) < 3:
        raise DegenerateModulus(f"defining polynomial of {name!r} has degree {len(coeffs) - 1}")
    if coeffs[-1] != tower.one(L):
        raise ValidationError(f"defining polynomial of {name!r} is not monic")
    g = tower.p_gcd(coeffs, tower.p_deriv(coeffs, L), L)
    replaced = tower.replaced
    if len(g) > 1:
        q, r = tower.p_divmod(coeffs, g, L)
        assert not r
        replaced = replaced + ((name, tuple(coeffs)),)
        coeffs = tower.p_monic(q, L)
        if len(coeffs) < 3:
            raise DegenerateModulus(f"squarefree part of the polynomial defining {name!r} is linear")
    return Tower(tower.levels + (Level(name, tuple(coeffs)),), replaced)


def _coeffs_over(tower, poly):
    if hasattr(poly, "coeffs"):
        if poly.tower != tower:
            if not poly.tower.is_prefix_of(tower):
                raise ValidationError("polynomial lives over an unrelated tower")
            poly = poly.lift(tower)
        return list(poly.coeffs)
    return list(_trim(poly))


def split(tower, level, factor):
    """Split the modulus at ``level`` along a monic proper ``factor``.

    Returns two towers whose moduli at ``level`` are ``factor`` and the exact
    cofactor; levels above are re-reduced into each branch.  A branch may end
    up with a degree-1 ("degenerate") level, whose generator is then a plain
    element of the level below.
    """
    L = level - 1
    m = list(tower.modulus(level))
    f = _coeffs_over(tower.truncate(L), factor)
    if not f or f[-1] != tower.one(L) or not 1 <= len(f) - 1 < len(m) - 1:
        raise NotAFactor("factor must be monic with 1 <= degree < degree of the modulus")
    q, r = tower.p_divmod(m, f, L)
    if r:
        raise NotAFactor("factor does not divide the modulus")
    return _rebuild(tower, level, f), _rebuild(tower, level, q)


def _rebuild(tower, level, modulus):
    name = tower.levels[level - 1].name
    out = Tower(tower.levels[: level - 1] + (Level(name, tuple(modulus)),), tower.replaced)
    for k in range(level + 1, tower.height + 1):
        lv = tower.levels[k - 1]
        new_mod = tuple(out.project(c, tower, k - 1) for c in lv.modulus)
        out = Tower(out.levels + (Level(lv.name, new_mod),), tower.replaced)
    return out


# -- text form -----------------------------------------------------------------

def _terms(tower, a, k):
    """Signed textual terms of a raw, as (negative, text) pairs."""
    if k == 0:
        if not a:
            return []
        q = Fraction(a)
        return [(q < 0, str(abs(q)))]
    name = tower.levels[k - 1].name
    out = []
    for e, c in enumerate(a):
        if not c:
            continue
        sub = _terms(tower, c, k - 1)
        mono = "" if e == 0 else (name if e == 1 else f"{name}^{e}")
        out.extend(_attach(sub, mono))
    return out


def _attach(sub, mono):
    if not mono:
        return sub
    if len(sub) == 1:
        neg, t = sub[0]
        return [(neg, mono if t == "1" else f"{t}*{mono}")]
    return [(False, f"({join_terms(sub)})*{mono}")]


def join_terms(terms):
    if not terms:
        return "0"
    out = []
    for i, (neg, t) in enumerate(terms):
        if i == 0:
            out.append(f"-{t}" if neg else t)
        else:
            out.append(f" - {t}" if neg else f" + {t}")
    return "".join(out)


def format_raw(tower, a, k=None):
    k = tower.height if k is None else k
    return join_terms(_terms(tower, a, k))


def format_poly(coeffs, tower, var, level=None):
    """Polynomial in ``var`` with raw coefficients at ``level``, highest degree first."""
    level = tower.height if level is None else level
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        terms.extend(_attach(_terms(tower, c, level), mono))
    return join_terms(terms)


class AlgNum:
    """An element of the top level of a tower."""

    __slots__ = ("tower", "raw")

    def __init__(self, tower, raw=0):
        self.tower = tower
        self.raw = raw

    @classmethod
    def from_rational(cls, tower, q):
        return cls(tower, tower.rational(q))

    @classmethod
    def gen(cls, tower, name=None):
        k = tower.height if name is None else tower.names.index(name) + 1
        return cls(tower, tower.embed(tower.generator(k), k))

    def _coerce(self, other):
        if isinstance(other, AlgNum):
            if other.tower == self.tower:
                return other.raw
            if other.tower.is_prefix_of(self.tower):
                return self.tower.embed(other.raw, other.tower.height)
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return self.tower.rational(other)
        return NotImplemented

    def _wrap(self, raw):
        return AlgNum(self.tower, raw)

    def _lifted(self, other):
        # self lives in a prefix of other's tower
        if isinstance(other, AlgNum) and self.tower.is_prefix_of(other.tower) and self.tower != other.tower:
            return AlgNum(other.tower, other.tower.embed(self.raw, self.tower.height))
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            up = self._lifted(other)
            return NotImplemented if up is None else up + other
        return self._wrap(self.tower.add(self.raw, b, self.tower.height))

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(self.tower.neg(self.raw, self.tower.height))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            up = self._lifted(other)
            return NotImplemented if up is None else up * other
        return self._wrap(self.tower.mul(self.raw, b, self.tower.height))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        return self._wrap(self.tower.power(self.raw, e, self.tower.height))

    def inv(self):
        return self._wrap(self.tower.inv(self.raw, self.tower.height))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * AlgNum(self.tower, self._coerce(other)).inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def is_zero(self):
        return not self.raw

    def __bool__(self):
        return bool(self.raw)

    def as_rational(self):
        return self.tower.as_rational(self.raw)

    def __eq__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self.raw == b

    def __hash__(self):
        return hash((self.tower.height, self.raw))

    def __str__(self):
        return format_raw(self.tower, self.raw)

    def __repr__(self):
        return f"AlgNum({self})"


def inv(a):
    """Inverse of a nonzero AlgNum (or rational)."""
    if isinstance(a, AlgNum):
        return a.inv()
    return 1 / Fraction(a)
