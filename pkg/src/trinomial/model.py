"""Trinomial hypersurfaces, curves on them, and the existence decisions.

Type 1 is ``T_1^{l_1} + T_2^{l_2} + 1`` (two blocks, labelled 1 and 2);
Type 2 is ``T_0^{l_0} + T_1^{l_1} + T_2^{l_2}`` (three blocks, labelled 0..2).
Blocks are stored 0-based internally; ``label_offset`` maps back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Optional

from .errors import NotOnHypersurface, ShapeMismatch, ValidationError
from .intlat import kernel_basis
from .tower import AlgNum, Tower
from .upoly import UPoly


@dataclass(frozen=True)
class TrinomialSpec:
    kind: int  # 1 or 2
    blocks: tuple  # tuple of tuples of positive ints

    def __post_init__(self):
        blocks = tuple(tuple(int(e) for e in b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if self.kind not in (1, 2):
            raise ValidationError(f"type must be 1 or 2, got {self.kind}")
        want = 2 if self.kind == 1 else 3
        if len(blocks) != want:
            raise ValidationError(f"type {self.kind} needs {want} blocks, got {len(blocks)}")
        for b in blocks:
            if not b:
                raise ValidationError("empty block")
            if any(e < 1 for e in b):
                raise ValidationError(f"exponents must be positive: {b}")

    @classmethod
    def surface(cls, p, q, r):
        """The Pham-Brieskorn surface z0^p + z1^q + z2^r."""
        return cls(2, ((p,), (q,), (r,)))

    @property
    def label_offset(self):
        return 1 if self.kind == 1 else 0

    @property
    def shape(self):
        return tuple(len(b) for b in self.blocks)

    @property
    def n(self):
        return sum(self.shape)

    def is_surface(self):
        return self.kind == 2 and self.shape == (1, 1, 1)

    def permuted(self, perm):
        """Spec whose block k is block ``perm[k]`` of this one."""
        return TrinomialSpec(self.kind, tuple(self.blocks[i] for i in perm))

    def __str__(self):
        inner = " ".join("(" + ",".join(map(str, b)) + ")" for b in self.blocks)
        return f"type {self.kind}: {inner}"


@dataclass(frozen=True)
class Classification:
    kind: int
    d: tuple
    rational: bool
    horizontal_exists: bool
    factorial: bool
    sh_exists: Optional[bool] = None
    a1_poor: Optional[bool] = None
    platonic_triple: Optional[tuple] = None


class Curve:
    """Polynomial map x -> (T_ij(x)) over a tower; ``coords[i][j]`` is 0-based."""

    __slots__ = ("tower", "coords", "var")

    def __init__(self, coords, tower=None, var="x"):
        coords = tuple(tuple(c) for c in coords)
        polys = [p for b in coords for p in b]
        if tower is None:
            tower = max((p.tower for p in polys), key=lambda t: t.height, default=Tower())
        self.tower = tower
        self.coords = tuple(tuple(p.lift(tower) for p in b) for b in coords)
        self.var = var

    @property
    def shape(self):
        return tuple(len(b) for b in self.coords)

    def check_shape(self, spec):
        if self.shape != spec.shape:
            raise ShapeMismatch(f"curve shape {self.shape} does not match spec shape {spec.shape}")

    def is_nonconstant(self):
        return any(not p.is_constant() for b in self.coords for p in b)

    def project(self, tower):
        return Curve([[p.project(tower) for p in b] for b in self.coords], tower, self.var)

    def permuted(self, perm):
        return Curve([self.coords[i] for i in perm], self.tower, self.var)

    def __eq__(self, other):
        return isinstance(other, Curve) and self.tower == other.tower and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        parts = ", ".join(f"T[{i}][{j + 1}]={p}" for i, b in enumerate(self.coords) for j, p in enumerate(b))
        return f"Curve({parts})"


def block_gcds(spec):
    return tuple(reduce(math.gcd, b) for b in spec.blocks)


def is_platonic(p, q, r):
    """1/p + 1/q + 1/r > 1, cross-multiplied."""
    return q * r + p * r + p * q > p * q * r


def _pairwise_gcds(d):
    return math.gcd(d[0], d[1]), math.gcd(d[0], d[2]), math.gcd(d[1], d[2])


def type2_rational(d):
    g01, g02, g12 = _pairwise_gcds(d)
    one_coprime = (g01 == 1 and g02 == 1) or (g01 == 1 and g12 == 1) or (g02 == 1 and g12 == 1)
    return one_coprime or (g01 == g02 == g12 == 2)


def minimal_triple(spec):
    """Minimal exponent of each block, sorted in decreasing order."""
    return tuple(sorted((min(b) for b in spec.blocks), reverse=True))


def classify(spec):
    d = block_gcds(spec)
    if spec.kind == 2:
        rational = type2_rational(d)
        triple = minimal_triple(spec)
        sh = is_platonic(*triple)
        return Classification(
            kind=2,
            d=d,
            rational=rational,
            horizontal_exists=rational,
            factorial=all(g == 1 for g in _pairwise_gcds(d)),
            sh_exists=sh,
            a1_poor=not sh,
            platonic_triple=triple,
        )
    d1, d2 = d
    return Classification(
        kind=1,
        d=d,
        rational=d1 == 1 or d2 == 1 or d1 == d2 == 2,
        horizontal_exists=any(e == 1 for b in spec.blocks for e in b),
        factorial=any(len(b) == 1 and b[0] == 1 for b in spec.blocks) or d1 == d2 == 1,
    )


def torus_weights(spec):
    return kernel_basis(spec)


def _as_algnums(point):
    flat = [c for b in point for c in b]
    towers = [c.tower for c in flat if isinstance(c, AlgNum)]
    tower = max(towers, key=lambda t: t.height, default=Tower())
    out = []
    for b in point:
        row = []
        for c in b:
            if isinstance(c, AlgNum):
                row.append(c if c.tower == tower else AlgNum(tower, tower.embed(c.raw, c.tower.height)))
            else:
                row.append(AlgNum.from_rational(tower, Fraction(c)))
        out.append(row)
    return out, tower


def trinomial_value(spec, values):
    """Value of the trinomial at block values (AlgNum or UPoly entries)."""
    total = None
    for b, exps in zip(values, spec.blocks):
        term = None
        for v, e in zip(b, exps):
            f = v ** e
            term = f if term is None else term * f
        total = term if total is None else total + term
    if spec.kind == 1:
        total = total + 1
    return total


def is_singular_point(spec, point):
    """Whether ``point`` (blocks of coordinates) is a singular point of X."""
    if spec.kind != 2:
        raise ValidationError("singular points are only defined for Type 2 here")
    if tuple(len(b) for b in point) != spec.shape:
        raise ShapeMismatch("point shape does not match the spec")
    pt, _ = _as_algnums(point)
    if not trinomial_value(spec, pt).is_zero():
        raise NotOnHypersurface("point does not satisfy the trinomial relation")
    for b, exps in zip(pt, spec.blocks):
        zeros = [j for j, c in enumerate(b) if c.is_zero()]
        if len(zeros) >= 2:
            continue
        if any(exps[j] >= 2 for j in zeros):
            continue
        return False
    return True


def const_curve(tower, coords, var="x"):
    """Convenience: build a curve from nested lists of UPoly/scalars."""
    rows = []
    for b in coords:
        rows.append([c if isinstance(c, UPoly) else UPoly.const(tower, c) for c in b])
    return Curve(rows, tower, var)
