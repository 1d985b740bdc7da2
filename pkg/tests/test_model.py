import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gaussian
from trinomial.errors import NotOnHypersurface, ShapeMismatch, ValidationError
from trinomial.model import TrinomialSpec, block_gcds, classify, is_platonic, is_singular_point, torus_weights
from trinomial.intlat import in_lattice
from trinomial.tower import AlgNum

LIFT = TrinomialSpec(2, ((2, 4), (6,), (8,)))


def test_spec_validation():
    with pytest.raises(ValidationError):
        TrinomialSpec(3, ((1,), (1,), (1,)))
    with pytest.raises(ValidationError):
        TrinomialSpec(2, ((1,), (1,)))
    with pytest.raises(ValidationError):
        TrinomialSpec(1, ((0,), (1,)))
    with pytest.raises(ValidationError):
        TrinomialSpec(1, ((), (1,)))


def test_block_gcds():
    assert block_gcds(LIFT) == (2, 6, 8)
    assert block_gcds(TrinomialSpec.surface(3, 3, 3)) == (3, 3, 3)
    assert block_gcds(TrinomialSpec(1, ((1, 5), (2,)))) == (1, 2)


def test_classification_goldens():
    cl = classify(TrinomialSpec.surface(3, 3, 3))
    assert not cl.rational and not cl.horizontal_exists
    cl = classify(TrinomialSpec.surface(2, 3, 5))
    assert cl.rational and cl.sh_exists
    cl = classify(LIFT)
    assert cl.rational and not cl.sh_exists and not cl.factorial and cl.a1_poor
    assert not classify(TrinomialSpec(2, ((6,), (10,), (15,)))).rational
    assert not classify(TrinomialSpec(1, ((2, 2), (2,)))).horizontal_exists
    assert classify(TrinomialSpec(1, ((1, 2), (3,)))).horizontal_exists


def test_platonic_list():
    found = {
        tuple(sorted(t, reverse=True))
        for t in itertools.product(range(2, 12), repeat=3)
        if is_platonic(*t)
    }
    exceptional = {(5, 3, 2), (4, 3, 2), (3, 3, 2)}
    assert exceptional <= found
    assert all(t in exceptional or t[1:] == (2, 2) for t in found)


def _oracle_rational(d):
    pairs = {(0, 1): math.gcd(d[0], d[1]), (0, 2): math.gcd(d[0], d[2]), (1, 2): math.gcd(d[1], d[2])}
    for i in range(3):
        if all(g == 1 for k, g in pairs.items() if i in k):
            return True
    return set(pairs.values()) == {2}


specs2 = st.lists(st.lists(st.integers(1, 9), min_size=1, max_size=3), min_size=3, max_size=3)


@settings(max_examples=500)
@given(specs2, st.permutations([0, 1, 2]), st.randoms(use_true_random=False))
def test_classification_chain_and_invariance(blocks, perm, rnd):
    spec = TrinomialSpec(2, tuple(tuple(b) for b in blocks))
    cl = classify(spec)
    if cl.sh_exists:
        assert cl.horizontal_exists
    assert cl.horizontal_exists == cl.rational
    assert cl.rational == _oracle_rational(cl.d)
    if cl.factorial:
        assert cl.rational
    assert cl.a1_poor == (not cl.sh_exists)
    mins = [min(b) for b in blocks]
    assert cl.sh_exists == (sum(Fraction(1, m) for m in mins) > 1)
    # permuting blocks and entries inside blocks changes nothing
    shuffled = []
    for i in perm:
        b = list(blocks[i])
        rnd.shuffle(b)
        shuffled.append(tuple(b))
    other = classify(TrinomialSpec(2, tuple(shuffled)))
    assert (other.rational, other.factorial, other.sh_exists, other.a1_poor) == (
        cl.rational,
        cl.factorial,
        cl.sh_exists,
        cl.a1_poor,
    )
    assert sorted(other.d) == sorted(cl.d)


def test_singular_points():
    spec = TrinomialSpec.surface(2, 3, 5)
    assert is_singular_point(spec, [[0], [0], [0]])
    spec = TrinomialSpec(2, ((1, 2), (2,), (2,)))
    # block 0 vanishes only through its exponent-1 coordinate
    assert not is_singular_point(spec, [[0, 5], [1], [gaussian_i()]])
    with pytest.raises(NotOnHypersurface):
        is_singular_point(TrinomialSpec.surface(2, 2, 2), [[1], [1], [1]])
    with pytest.raises(ShapeMismatch):
        is_singular_point(TrinomialSpec.surface(2, 2, 2), [[0, 0], [0], [0]])


def gaussian_i():
    return AlgNum.gen(gaussian())


@given(specs2)
def test_origin_singular_when_all_exponents_at_least_two(blocks):
    blocks = [[e + 1 if e == 1 else e for e in b] for b in blocks]
    spec = TrinomialSpec(2, tuple(tuple(b) for b in blocks))
    assert is_singular_point(spec, [[0] * len(b) for b in blocks])


def test_torus_weights():
    basis = torus_weights(LIFT)
    assert in_lattice(basis, (12, 0, 4, 3)) and in_lattice(basis, (-2, 1, 0, 0))
    assert torus_weights(TrinomialSpec(1, ((2,), (2,)))) == []
