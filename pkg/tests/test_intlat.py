import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trinomial.errors import NotCoprime, NotRepresentable
from trinomial.intlat import hermite_rows, in_lattice, kernel_basis, positive_bezout, represent_in_semigroup
from trinomial.model import TrinomialSpec


def test_positive_bezout_examples():
    assert positive_bezout(5, 6) == (4, 5)
    assert positive_bezout(1, 6) == (1, 7)
    with pytest.raises(NotCoprime):
        positive_bezout(3, 9)


@given(st.integers(1, 60), st.integers(1, 60))
def test_positive_bezout_is_minimal(R, M):
    if math.gcd(R, M) != 1:
        with pytest.raises(NotCoprime):
            positive_bezout(R, M)
        return
    u, v = positive_bezout(R, M)
    assert u >= 1 and v >= 1 and v * R - u * M == 1
    # brute force: no smaller positive u works
    assert all((1 + k * M) % R for k in range(1, u))


def test_kernel_examples():
    spec = TrinomialSpec(2, ((2, 4), (6,), (8,)))
    basis = kernel_basis(spec)
    assert len(basis) == 2
    assert in_lattice(basis, (12, 0, 4, 3))
    assert in_lattice(basis, (-2, 1, 0, 0))

    basis = kernel_basis(TrinomialSpec.surface(2, 3, 5))
    assert basis in ([(15, 10, 6)], [(-15, -10, -6)])

    assert kernel_basis(TrinomialSpec(1, ((1,), (1,)))) == []
    assert kernel_basis(TrinomialSpec(1, ((2,), (2,)))) == []
    assert in_lattice(kernel_basis(TrinomialSpec.surface(2, 2, 2)), (1, 1, 1))


def _block_relations_hold(spec, w):
    pos = 0
    values = []
    for b in spec.blocks:
        values.append(sum(e * w[pos + j] for j, e in enumerate(b)))
        pos += len(b)
    if spec.kind == 1:
        return all(v == 0 for v in values)
    return values[0] == values[1] == values[2]


blocks = st.lists(st.integers(1, 9), min_size=1, max_size=3)


@given(st.sampled_from([1, 2]), st.lists(blocks, min_size=3, max_size=3))
def test_kernel_basis_properties(kind, bl):
    spec = TrinomialSpec(kind, tuple(bl[: 2 if kind == 1 else 3]))
    basis = kernel_basis(spec)
    assert len(basis) == spec.n - 2
    for w in basis:
        assert _block_relations_hold(spec, w)
    # saturation: every small solution is in the lattice
    n = spec.n
    if n <= 4:
        for w in itertools.product(range(-3, 4), repeat=n):
            if _block_relations_hold(spec, w):
                assert in_lattice(basis, w)


def test_hermite_rows_is_canonical():
    a = hermite_rows([(2, 4, 6), (1, 1, 1)])
    b = hermite_rows([(1, 1, 1), (3, 5, 7)])
    assert a == b


def test_semigroup_examples():
    assert represent_in_semigroup(10, (2, 4)) == (1, 2)
    assert represent_in_semigroup(42, (6,)) == (7,)
    with pytest.raises(NotRepresentable):
        represent_in_semigroup(3, (2, 4))


@given(st.integers(1, 80), st.lists(st.integers(1, 12), min_size=1, max_size=3))
def test_semigroup_matches_enumeration(target, gens):
    sols = [
        b
        for b in itertools.product(*(range(1, target // g + 1) for g in gens))
        if sum(x * g for x, g in zip(b, gens)) == target
    ]
    if not sols:
        with pytest.raises(NotRepresentable):
            represent_in_semigroup(target, gens)
        return
    assert represent_in_semigroup(target, gens) == min(sols)
