from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P, QQ, gaussian, to_sympy
from trinomial.errors import NotASquare, NotDivisible
from trinomial.model import Curve
from trinomial.tower import AlgNum, adjoin
from trinomial.upoly import (
    NEG_INF,
    UPoly,
    exact_div,
    gcd_monic,
    int_poly_mul,
    is_proportional,
    poly_sqrt,
    radical_and_d0,
)
from trinomial.verify import nonzero_everywhere, over_branches

x = UPoly.x()
X = sympy.Symbol("x")


def test_basic_arithmetic_examples():
    assert (x ** 5 + 1) ** 2 == P(1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1)
    assert (x ** 3 + x ** 2).derivative() == 3 * x ** 2 + 2 * x
    assert ((x + 1) ** 2 * x ** 3)(-1) == 0
    assert (x ** 2 + 1)(x + 1) == x ** 2 + 2 * x + 2


def test_degree_of_zero_is_negative_infinity():
    assert UPoly(QQ).degree() == NEG_INF
    assert UPoly(QQ).degree() < 0


def test_exact_div_examples():
    y = x ** 5
    assert exact_div(-((y + 1) ** 2 - (2 * y + 1) ** 3), y) == 8 * x ** 10 + 11 * x ** 5 + 4
    assert exact_div(x ** 2 - 1, x - 1) == x + 1
    with pytest.raises(NotDivisible):
        exact_div(x ** 2 + 1, x)


def test_gcd_examples():
    assert gcd_monic((x + 1) * x ** 2, (x + 1) * x ** 3) == x ** 3 + x ** 2
    assert gcd_monic((x + 1) ** 3 * x, (x - 1) ** 3 * x) == x
    assert gcd_monic(x ** 2 + 1, x ** 2 + 2) == 1


def test_radical_examples():
    assert radical_and_d0(x ** 3 + x ** 2) == (x ** 2 + x, 2)
    assert radical_and_d0((x + 1) ** 5) == (x + 1, 1)
    rad, d0 = radical_and_d0(UPoly.const(QQ, 7))
    assert rad == 1 and d0 == 0


def test_poly_sqrt_examples():
    g, t = poly_sqrt(x ** 2 + 2 * x + 1)
    assert g == x + 1 and t == QQ
    g, t = poly_sqrt(2 * x ** 2)
    assert t.height == 1
    s = AlgNum.gen(t)
    assert s * s == 2
    assert g == UPoly.x(t).scale(s)
    with pytest.raises(NotASquare):
        poly_sqrt(x ** 3)
    with pytest.raises(NotASquare):
        poly_sqrt(x ** 2 + 1)


def test_is_proportional_examples():
    assert is_proportional(2 * x + 2, x + 1) == 2
    assert is_proportional(x ** 2, x ** 3) is None
    assert is_proportional(UPoly(QQ), x + 1) == 0


def test_gaussian_gcd():
    t = gaussian()
    i = UPoly.const(t, AlgNum.gen(t))
    z = UPoly.x(t)
    # x^2 + 1 = (x - i)(x + i)
    assert gcd_monic(z ** 2 + 1, z - i) == z - i
    assert gcd_monic(z ** 2 + 1, (z + i) * (z + 2)) == z + i


# -- independent oracles for the Kronecker product --------------------------------

ints = st.integers(-10**6, 10**6)
small = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 6))


@given(st.lists(ints, min_size=1, max_size=40), st.lists(ints, min_size=1, max_size=40))
def test_int_poly_mul_matches_convolution(a, b):
    want = [0] * (len(a) + len(b) - 1)
    for i, p in enumerate(a):
        for j, q in enumerate(b):
            want[i + j] += p * q
    assert int_poly_mul(a, b) == want


@given(st.lists(small, min_size=8, max_size=30), st.lists(small, min_size=8, max_size=30))
def test_rational_product_matches_sympy(a, b):
    p, q = P(*a), P(*b)
    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))


@given(st.lists(st.tuples(small, small), min_size=8, max_size=20), st.lists(st.tuples(small, small), min_size=8, max_size=20))
def test_tower_product_matches_schoolbook(a, b):
    t = gaussian()
    pa = UPoly(t, [t.reduce(list(c), 1) for c in a])
    pb = UPoly(t, [t.reduce(list(c), 1) for c in b])
    assert (pa * pb).coeffs == UPoly(t, t.p_mul(pa.coeffs, pb.coeffs, 1)).coeffs


def test_two_level_product_matches_schoolbook():
    t = adjoin(gaussian(), "s", UPoly.x(gaussian()) ** 2 - 3)
    i, s = AlgNum.gen(t, "i"), AlgNum.gen(t, "s")
    z = UPoly.x(t)
    p = (z + i) ** 9 + UPoly.const(t, s) * z ** 4
    q = (z * s - 1) ** 11
    assert (p * q).coeffs == UPoly(t, t.p_mul(p.coeffs, q.coeffs, 2)).coeffs


# -- algebra laws over random towers -------------------------------------------------

TOWERS = [QQ, gaussian(), adjoin(QQ, "r", P(-2, 0, 0, 1))]


@st.composite
def polys(draw, tower, max_deg=6):
    n = draw(st.integers(0, max_deg))
    deg = tower.degree(tower.height) if tower.height else 1
    coeffs = []
    for _ in range(n + 1):
        parts = draw(st.lists(small, min_size=deg, max_size=deg))
        coeffs.append(tower.reduce(parts, tower.height) if tower.height else parts[0])
    return UPoly(tower, coeffs)


@st.composite
def tower_and_polys(draw, count=2):
    t = draw(st.sampled_from(TOWERS))
    return t, [draw(polys(t)) for _ in range(count)]


@settings(max_examples=300)
@given(tower_and_polys())
def test_exact_div_inverts_multiplication(data):
    _, (p, q) = data
    if q.is_zero():
        return
    assert exact_div(p * q, q) == p


@settings(max_examples=300)
@given(tower_and_polys(3))
def test_gcd_divides_and_scales(data):
    _, (p, q, a) = data
    if p.is_zero() and q.is_zero():
        return
    g = gcd_monic(p, q)
    assert g.is_monic()
    assert (p % g).is_zero() and (q % g).is_zero()
    if not a.is_zero():
        assert gcd_monic(a * p, a * q) == a.monic() * g


@settings(max_examples=300)
@given(tower_and_polys(2))
def test_radical_is_squarefree(data):
    _, (p, q) = data
    if p.is_zero():
        return
    rad, d0 = radical_and_d0(p)
    assert gcd_monic(rad, rad.derivative()).is_constant()
    assert (p % rad).is_zero()
    if not p.is_constant():
        assert radical_and_d0(p ** 3)[1] == d0
    if not q.is_zero() and gcd_monic(p, q).is_constant():
        assert radical_and_d0(p * q)[1] == d0 + radical_and_d0(q)[1]


@settings(max_examples=100)
@given(tower_and_polys(1))
def test_sqrt_of_square(data):
    _, (g,) = data
    if g.is_zero():
        return
    root, t = poly_sqrt(g * g)
    assert root * root == (g * g).lift(t)
    g = g.lift(t)
    if t == data[0]:
        assert root == g or root == -g
        return
    # a new generator was adjoined; in every branch of the (possibly
    # reducible) extension the root is g or -g
    curve = Curve([[root - g, root + g]], t)

    def check(c):
        a, b = c.coords[0]
        if a.is_zero() or b.is_zero():
            return True
        return not nonzero_everywhere(a)

    assert all(ok for _, ok in over_branches(curve, check))
