from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import P, QQ, gaussian
from trinomial.errors import DegenerateModulus, NotAFactor, ValidationError, ZeroDivisor
from trinomial.tower import AlgNum, adjoin, inv, split
from trinomial.upoly import UPoly


def cube_root_of_minus_one():
    return adjoin(QQ, "g", P(1, 0, 0, 1))


def test_adjoin_defines_the_generator():
    t = cube_root_of_minus_one()
    eps = AlgNum.gen(t)
    assert eps ** 3 == -1
    assert t.height == 1 and t.degree(1) == 3


def test_adjoin_replaces_non_squarefree_modulus():
    t = adjoin(QQ, "g", P(1, 0, 2, 0, 1))  # (g^2+1)^2
    assert t.modulus(1) == (1, 0, 1)
    assert t.replaced and t.replaced[0][0] == "g"


def test_adjoin_rejects_linear_and_duplicate():
    with pytest.raises(DegenerateModulus):
        adjoin(QQ, "g", P(-3, 1))
    t = gaussian()
    with pytest.raises(ValidationError):
        adjoin(t, "i", P(-2, 0, 1, tower=t))
    with pytest.raises(ValidationError):
        adjoin(QQ, "g", P(1, 0, 2))


def test_inverse_examples():
    t = cube_root_of_minus_one()
    eps = AlgNum.gen(t)
    assert inv(eps) == -(eps ** 2)
    assert inv(Fraction(2, 3)) == Fraction(3, 2)
    assert AlgNum.from_rational(QQ, Fraction(2, 3)).inv() == Fraction(3, 2)


def test_zero_divisor_reports_a_factor():
    t = adjoin(QQ, "g", P(-1, 0, 1))
    g = AlgNum.gen(t)
    with pytest.raises(ZeroDivisor) as info:
        (g - 1).inv()
    zd = info.value
    assert zd.level == 1
    f = zd.factor
    assert f.degree() == 1
    m = P(-1, 0, 1)
    assert (m % f).is_zero()


def test_zero_is_not_invertible():
    with pytest.raises(ZeroDivisionError):
        AlgNum(gaussian(), ()).inv()


def test_split_into_degenerate_levels():
    t = adjoin(QQ, "g", P(-1, 0, 1))
    a, b = split(t, 1, P(-1, 1))
    ga, gb = AlgNum.gen(a), AlgNum.gen(b)
    assert ga.as_rational() == 1
    assert gb.as_rational() == -1
    assert a.degree(1) == 1 and b.degree(1) == 1


def test_split_quartic_along_quadratic():
    # (g^2+1)(g^2-2)
    t = adjoin(QQ, "g", P(-2, 0, -1, 0, 1))
    a, b = split(t, 1, P(1, 0, 1))
    prod = UPoly(QQ, a.modulus(1)) * UPoly(QQ, b.modulus(1))
    assert prod == UPoly(QQ, t.modulus(1))


def test_split_rejects_non_factor():
    t = adjoin(QQ, "g", P(-2, 0, -1, 0, 1))
    with pytest.raises(NotAFactor):
        split(t, 1, P(0, 1, 1))


def test_split_reprojects_upper_levels():
    t = adjoin(QQ, "g", P(-1, 0, 1))
    g = AlgNum.gen(t)
    y = UPoly.x(t)
    t2 = adjoin(t, "h", y * y - UPoly.const(t, g + 3))
    a, b = split(t2, 1, P(-1, 1))
    h = AlgNum.gen(a)
    assert h * h == 4  # g = 1 in this branch
    h = AlgNum.gen(b)
    assert h * h == 2


def test_two_level_tower_arithmetic_matches_sympy():
    t = adjoin(QQ, "s2", P(-2, 0, 1))
    t = adjoin(t, "i", UPoly.x(t) ** 2 + 1)
    i, s = AlgNum.gen(t, "i"), AlgNum.gen(t, "s2")
    z = (1 + i * s) ** 5 * (s - i).inv()
    I, S = sympy.I, sympy.sqrt(2)
    expected = sympy.nsimplify(sympy.expand((1 + I * S) ** 5 / (S - I)))
    got = sympy.sympify(str(z).replace("^", "**"), locals={"i": I, "s2": S})
    assert sympy.simplify(got - expected) == 0


rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))


@given(st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3))
def test_inverse_property(a, b):
    t = cube_root_of_minus_one()  # reducible: (g+1)(g^2-g+1)
    x = AlgNum(t, t.reduce(list(a), 1))
    if x.is_zero():
        return
    try:
        y = x.inv()
    except ZeroDivisor as zd:
        m = UPoly(QQ, t.modulus(1))
        assert (m % zd.factor).is_zero()
        assert 1 <= zd.factor.degree() < 3
        return
    assert x * y == 1


@given(st.lists(rationals, min_size=2, max_size=2), st.lists(rationals, min_size=2, max_size=2))
def test_gaussian_arithmetic_matches_complex_fractions(a, b):
    t = gaussian()
    x, y = AlgNum(t, t.reduce(a, 1)), AlgNum(t, t.reduce(b, 1))
    prod = x * y
    re = a[0] * b[0] - a[1] * b[1]
    im = a[0] * b[1] + a[1] * b[0]
    assert prod == AlgNum(t, t.reduce([re, im], 1))
    # canonical forms are fixed points of reduction
    assert t.reduce(list(prod.raw), 1) == prod.raw


def test_canonical_zero_is_falsy():
    t = gaussian()
    i = AlgNum.gen(t)
    assert not (i * i + 1).raw
    assert (i * i + 1).is_zero()
