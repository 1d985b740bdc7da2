"""Constructions of polynomial curves on trinomial hypersurfaces.

Every public constructor checks its own output with the independent
verifiers in :mod:`trinomial.verify` and raises
:class:`~trinomial.errors.VerificationFailed` rather than return a curve that
does not pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from . import shdata
from .errors import (
    ConstructionFailed,
    LimitExceeded,
    NoHorizontalCurve,
    NotASquare,
    NotDivisible,
    NotPlatonic,
    NotRational,
    NotRepresentable,
    PreconditionViolated,
    SeedInvalid,
    VerificationFailed,
    ZeroDivisor,
)
from .intlat import positive_bezout, represent_in_semigroup
from .model import Curve, TrinomialSpec, block_gcds, classify
from .tower import AlgNum, adjoin, split
from .upoly import QQ, UPoly, _fresh_name, exact_div, poly_sqrt, radical_and_d0
from .verify import is_horizontal, is_sh, on_hypersurface

ROUTES = ("pythagorean", "paper_eq3")
C_SEARCH_CAP = 10**6
# largest block-value degree the coprime route will build
DEGREE_CAP = 5000


@dataclass
class ConstructionTrace:
    """Intermediate data of a construction, for inspection and ``--trace``."""

    route: str = ""
    permutation: tuple = ()
    bezout: dict = field(default_factory=dict)
    constants: dict = field(default_factory=dict)
    polys: dict = field(default_factory=dict)
    lift: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    branches: list = field(default_factory=list)

    def lines(self, var="x"):
        out = [f"route = {self.route}"]
        if self.permutation:
            out.append("permutation = " + " ".join(map(str, self.permutation)))
        out += [f"{k} = {v}" for k, v in self.bezout.items()]
        out += [f"{k} = {v}" for k, v in self.constants.items()]
        for k, v in self.lift.items():
            out.append(f"{k} = {_fmt_seq(v)}")
        for k, p in self.polys.items():
            out.append(f"{k} = {p.format(var) if isinstance(p, UPoly) else p}")
        out += [f"branch {i} = {b}" for i, b in enumerate(self.branches)]
        out += [f"check {k} = {'true' if v else 'false'}" for k, v in self.checks.items()]
        return out


def _fmt_seq(v):
    if isinstance(v, (list, tuple)):
        return " ".join(_fmt_seq(x) if not isinstance(x, (list, tuple)) else "(" + ",".join(map(str, x)) + ")" for x in v)
    return str(v)


def _x(tower=QQ):
    return UPoly.x(tower)


def _const(tower, c):
    return UPoly.const(tower, c)


def _self_check(spec, curve, trace=None, horizontal=True, sh=False):
    on = on_hypersurface(spec, curve)
    checks = {"on_hypersurface": on}
    if on and horizontal:
        checks["is_horizontal"] = is_horizontal(spec, curve)
    if on and sh:
        checks["is_sh"] = is_sh(spec, curve)
    if trace is not None:
        trace.checks.update(checks)
    if not all(checks.values()):
        failed = ", ".join(k for k, v in checks.items() if not v)
        raise VerificationFailed(f"constructed curve fails: {failed}")


# -- trivial curves -----------------------------------------------------------------

def trivial_curve(p, q, r, phi=None):
    """(phi^{m/p}, phi^{m/q}, gamma*phi^{m/r}) with m = lcm and gamma^r = -2."""
    phi = _x() if phi is None else phi
    if phi.is_constant():
        raise PreconditionViolated("phi must be non-constant")
    m = math.lcm(p, q, r)
    tower = phi.tower
    if r == 1:
        gamma = _const(tower, -2)
    else:
        y = _x(tower)
        tower = adjoin(tower, _fresh_name(tower, "gamma"), y ** r + 2)
        gamma = UPoly.const(tower, AlgNum.gen(tower))
        phi = phi.lift(tower)
    curve = Curve([[phi ** (m // p)], [phi ** (m // q)], [gamma * phi ** (m // r)]], tower)
    _self_check(TrinomialSpec.surface(p, q, r), curve, horizontal=False)
    return curve


# -- surfaces with one exponent coprime to the others ----------------------------

def _exponent_one_shortcut(exps):
    """Slot with exponent 1 absorbs the other two terms: x^E + 1 + z = 0."""
    a = exps.index(1)
    b, c = [k for k in range(3) if k != a]
    z = [None] * 3
    z[b] = _x()
    z[c] = _const(QQ, 1)
    z[a] = -(_x() ** exps[b] + 1)
    return z


def coprime_block_degree(P, Q, R):
    """Degree of z0^P (= z1^Q = z2^R) on the coprime route, before building it."""
    if 1 in (P, Q, R):
        return max(P, Q, R)
    u, _ = positive_bezout(R, P * Q)
    return P * (R * (max(P, Q) - 1) * u * Q + R)


def surface_coprime_horizontal(P, Q, R, max_degree=DEGREE_CAP):
    """Horizontal curve on z0^P + z1^Q + z2^R = 0 when R is coprime to P and Q."""
    if min(P, Q, R) < 1:
        raise PreconditionViolated("exponents must be positive")
    if math.gcd(R, P) != 1 or math.gcd(R, Q) != 1:
        raise PreconditionViolated(f"R = {R} must be coprime to P = {P} and Q = {Q}")
    spec = TrinomialSpec.surface(P, Q, R)
    if max_degree is not None and coprime_block_degree(P, Q, R) > max_degree:
        raise LimitExceeded(
            f"coprime route for ({P}, {Q}, {R}) needs block degree "
            f"{coprime_block_degree(P, Q, R)} > {max_degree}"
        )
    trace = ConstructionTrace(route="coprime")
    if 1 in (P, Q, R):
        trace.route = "coprime_shortcut"
        curve = Curve([[z] for z in _exponent_one_shortcut((P, Q, R))], QQ)
        _self_check(spec, curve, trace)
        return curve, trace

    x = _x()
    y = x ** R
    # (x^R+1)^P + (eps*(2x^R+1))^Q + x^R*l = 0 with eps^Q = -1
    ell = exact_div((2 * y + 1) ** Q - (y + 1) ** P, y)
    if Q % 2:
        tower = QQ
        eps = _const(tower, -1)
        trace.constants["epsilon"] = "-1"
    else:
        g = _x()
        tower = adjoin(QQ, "eps", g ** Q + 1)
        eps = UPoly.const(tower, AlgNum.gen(tower))
        trace.constants["epsilon"] = f"root of eps^{Q} + 1"
    u, v = positive_bezout(R, P * Q)
    trace.bezout.update(u=u, v=v)
    trace.polys["l"] = ell
    z0 = ell ** (u * Q) * (y + 1)
    z1 = eps * ell ** (u * P) * (2 * y + 1)
    z2 = ell ** v * x
    curve = Curve([[z0], [z1], [z2]], tower)
    _self_check(spec, curve, trace)
    return curve, trace


# -- the square combiner -------------------------------------------------------------

def square_bezout(p1, q1, r1):
    """(u1, v1, u2, v2, u3, v3) with u1 p1 - v1 q1 r1 = 1 and cyclically."""
    out = []
    for a, b in ((p1, q1 * r1), (q1, p1 * r1), (r1, p1 * q1)):
        s, t = positive_bezout(a, b)  # t*a - s*b = 1
        out += [t, s]
    return tuple(out)


def combine_squares(seed, p1, q1, r1):
    """Turn l0^2 w0^{2p1} + l1^2 w1^{2q1} + l2^2 w2^{2r1} = 0 into a solution
    of z0^{2p1} + z1^{2q1} + z2^{2r1} = 0."""
    if math.gcd(p1, q1) != 1 or math.gcd(p1, r1) != 1 or math.gcd(q1, r1) != 1:
        raise PreconditionViolated(f"({p1}, {q1}, {r1}) are not pairwise coprime")
    l0, w0, l1, w1, l2, w2 = _same_tower(seed)
    lhs = l0 ** 2 * w0 ** (2 * p1) + l1 ** 2 * w1 ** (2 * q1) + l2 ** 2 * w2 ** (2 * r1)
    if not lhs.is_zero():
        raise SeedInvalid("seed does not satisfy the sum-of-squares relation")
    u1, v1, u2, v2, u3, v3 = square_bezout(p1, q1, r1)
    expo = [
        (u1, v2 * r1, v3 * q1),
        (v1 * r1, u2, v3 * p1),
        (v1 * q1, v2 * p1, u3),
    ]
    # z_i^{2e_i} = l_i^2 w_i^{2e_i} * M with one common M = l0^a l1^b l2^c
    common = (2 * v1 * q1 * r1, 2 * v2 * p1 * r1, 2 * v3 * p1 * q1)
    for i, (row, e) in enumerate(zip(expo, (p1, q1, r1))):
        got = tuple(2 * e * k for k in row)
        want = tuple(c + (2 if j == i else 0) for j, c in enumerate(common))
        if got != want:
            raise VerificationFailed("exponent bookkeeping of the combiner is inconsistent")
    ls = (l0, l1, l2)
    ws = (w0, w1, w2)
    out = []
    for row, w in zip(expo, ws):
        z = w
        for base, k in zip(ls, row):
            z = z * base ** k
        out.append(z)
    return tuple(out)


def _same_tower(polys):
    polys = [p if isinstance(p, UPoly) else _const(QQ, p) for p in polys]
    top = max((p.tower for p in polys), key=lambda t: t.height)
    return [p.lift(top) for p in polys]


# -- surfaces with all pairwise gcds 2 -----------------------------------------------

def _descending(exps):
    return tuple(sorted(range(3), key=lambda k: -exps[k]))


def _unpermute(zs, perm):
    out = [None] * 3
    for k, i in enumerate(perm):
        out[i] = zs[k]
    return out


def _pythagorean_seed(p1, q1, r1):
    tower = adjoin(QQ, "i", _x() ** 2 + 1)
    i = UPoly.const(tower, AlgNum.gen(tower))
    x = _x(tower)
    y = x ** (2 * r1)
    one = _const(tower, 1)
    return (1 - y, one, i * (1 + y), one, _const(tower, 2), x)


def surface_all_two_horizontal(P, Q, R, route="pythagorean"):
    """Horizontal curve on z0^P + z1^Q + z2^R = 0 when P, Q, R are twice
    pairwise coprime integers."""
    route = route.replace("-", "_")
    if route not in ROUTES:
        raise PreconditionViolated(f"unknown route {route!r}")
    exps = (P, Q, R)
    if any(e % 2 for e in exps):
        raise PreconditionViolated(f"{exps} are not all even")
    halves = [e // 2 for e in exps]
    if any(math.gcd(a, b) != 1 for a, b in ((halves[0], halves[1]), (halves[0], halves[2]), (halves[1], halves[2]))):
        raise PreconditionViolated(f"halves {tuple(halves)} are not pairwise coprime")
    perm = _descending(exps)
    p1, q1, r1 = (halves[k] for k in perm)
    spec = TrinomialSpec.surface(P, Q, R)
    trace = ConstructionTrace(route=route, permutation=perm)
    trace.bezout.update(zip(("u1", "v1", "u2", "v2", "u3", "v3"), square_bezout(p1, q1, r1)))

    if route == "pythagorean":
        seed = _pythagorean_seed(p1, q1, r1)
        for name, s in zip(("l0", "w0", "l1", "w1", "l2", "w2"), seed):
            trace.polys[name] = s
        zs = combine_squares(seed, p1, q1, r1)
        curve = Curve([[z] for z in _unpermute(zs, perm)])
        _self_check(spec, curve, trace)
        return curve, trace
    return _alpha_route(spec, perm, p1, q1, r1, trace)


def _alpha_modulus(q1):
    """Monic squarefree part of 2^{2q1} + 4 y^2 (y - 2^{q1})^2."""
    y = _x()
    quartic = y ** 4 - 2 ** (q1 + 1) * y ** 3 + 2 ** (2 * q1) * y ** 2 + Fraction(2 ** (2 * q1), 4)
    return radical_and_d0(quartic)[0].monic()


def _alpha_cofactor(tower, p1, q1, r1):
    """s, m and the negated quotient of the left-hand side by x^{2r1}."""
    alpha = UPoly.const(tower, AlgNum.gen(tower, "alpha0"))
    y = _x(tower) ** (2 * r1)
    s = alpha * (y + 1) ** p1
    m = s - (y + 2) ** q1
    lhs = (y + 2) ** (2 * q1) + 4 * alpha * alpha * m * m * (y + 1) ** (2 * p1)
    return alpha, s, m, -exact_div(lhs, y)


def _alpha_route(spec, perm, p1, q1, r1, trace):
    base = adjoin(QQ, "alpha0", _alpha_modulus(q1))
    trace.constants["alpha0"] = "root of " + _alpha_modulus(q1).format("y")
    pending = [base]
    first_cofactor = None
    while pending:
        tower = pending.pop(0)
        label = str(tower)
        cofactor = None
        try:
            alpha, s, m, cofactor = _alpha_cofactor(tower, p1, q1, r1)
            l2, _ = poly_sqrt(cofactor, name=_fresh_name(tower, "r"))
        except ZeroDivisor as zd:
            if zd.level > tower.height:
                trace.branches.append(f"{label}: zero divisor in the square root extension")
                continue
            pending[:0] = list(split(tower, zd.level, zd.factor_coeffs))
            continue
        except (NotASquare, NotDivisible) as exc:
            trace.branches.append(f"{label}: {exc}")
            if first_cofactor is None:
                first_cofactor = cofactor
            continue
        trace.polys.update(s=s, m=m, cofactor=cofactor)
        x = _x(tower)
        y = x ** (2 * r1)
        seed = (2 * alpha * m, y + 1, _const(tower, 1), y + 2, l2, x)
        zs = combine_squares(seed, p1, q1, r1)
        curve = Curve([[z] for z in _unpermute(zs, perm)])
        try:
            _self_check(spec, curve, trace)
        except (VerificationFailed, ZeroDivisor) as exc:
            trace.branches.append(f"{label}: curve rejected ({exc})")
            continue
        trace.branches.append(f"{label}: verified")
        return curve, trace
    raise ConstructionFailed(
        "no branch of the alpha0 modulus gives a square cofactor",
        cofactor=first_cofactor,
        branches=trace.branches,
    )


# -- lifting to hypersurfaces ---------------------------------------------------------

def _representable(target, block):
    try:
        return represent_in_semigroup(target, block)
    except NotRepresentable:
        return None


def choose_multipliers(spec, cap=C_SEARCH_CAP):
    """Greedy (hence lexicographically smallest) admissible c and the b_ij."""
    d = block_gcds(spec)
    D = d[0] * d[1] * d[2]
    cs, bs = [], []
    for i, block in enumerate(spec.blocks):
        c = 1
        while True:
            if c > cap:
                raise LimitExceeded(f"no admissible multiplier for block {i} up to {cap}")
            if math.gcd(c, D) == 1 and all(math.gcd(c, o) == 1 for o in cs):
                b = _representable(c * d[i], block)
                if b is not None:
                    break
            c += 1
        cs.append(c)
        bs.append(b)
    return tuple(cs), tuple(bs)


def _coprime_cost(P, Q, R):
    if 1 in (P, Q, R):
        return 0
    cost = coprime_block_degree(P, Q, R)
    return cost * (Q if Q % 2 == 0 else 1)


def _coprime_slots(C):
    """Best (a, b, k): block k in the R slot, blocks a, b as P and Q."""
    best = None
    for a, b, k in permutations(range(3)):
        if math.gcd(C[k], C[a]) != 1 or math.gcd(C[k], C[b]) != 1:
            continue
        key = _coprime_cost(C[a], C[b], C[k])
        if best is None or key < best[0]:
            best = (key, (a, b, k))
    return None if best is None else best[1]


def solve_surface(C, route="pythagorean", max_degree=DEGREE_CAP):
    """Horizontal curve on z0^C0 + z1^C1 + z2^C2 = 0 for a rational surface."""
    slots = _coprime_slots(C)
    if slots is not None:
        a, b, k = slots
        curve, trace = surface_coprime_horizontal(C[a], C[b], C[k], max_degree)
        trace.permutation = (a, b, k)
        zs = [blk[0] for blk in curve.coords]
        return _unpermute(zs, (a, b, k)), curve.tower, trace
    if all(math.gcd(C[i], C[j]) == 2 for i, j in ((0, 1), (0, 2), (1, 2))):
        curve, trace = surface_all_two_horizontal(*C, route=route)
        return [blk[0] for blk in curve.coords], curve.tower, trace
    raise NotRational(f"surface exponents {tuple(C)} are not rational")


def lift_horizontal(spec, route="pythagorean", max_degree=DEGREE_CAP):
    """Horizontal curve on a rational Type 2 hypersurface via T_ij = z_i^{b_ij}."""
    if spec.kind != 2:
        raise PreconditionViolated("lifting applies to Type 2 specs")
    if not classify(spec).rational:
        raise NotRational(f"{spec} is not rational")
    cs, bs = choose_multipliers(spec)
    d = block_gcds(spec)
    C = tuple(c * di for c, di in zip(cs, d))
    for block, b, target in zip(spec.blocks, bs, C):
        if sum(e * k for e, k in zip(block, b)) != target:
            raise VerificationFailed("semigroup representation is inconsistent")
    zs, tower, trace = solve_surface(C, route, max_degree)
    trace.lift.update(c=cs, C=C, b=bs)
    coords = [[z.lift(tower) ** k for k in b] for z, b in zip(zs, bs)]
    curve = Curve(coords, tower)
    _self_check(spec, curve, trace)
    return curve, trace


# -- Type 1 --------------------------------------------------------------------------------

def type1_horizontal(spec):
    """T_ij = -x^e - 1 at an exponent-1 variable, x at the other block's first."""
    if spec.kind != 1:
        raise PreconditionViolated("expected a Type 1 spec")
    hit = next(((i, j) for i, b in enumerate(spec.blocks) for j, e in enumerate(b) if e == 1), None)
    if hit is None:
        raise NoHorizontalCurve(f"{spec}: every exponent is at least 2")
    i, j = hit
    o = 1 - i
    x = _x()
    coords = [[_const(QQ, 1) for _ in b] for b in spec.blocks]
    coords[i][j] = -(x ** spec.blocks[o][0]) - 1
    coords[o][0] = x
    curve = Curve(coords, QQ)
    _self_check(spec, curve)
    return curve


# -- SH curves ---------------------------------------------------------------------------

def sh_surface(p, q, r):
    """Coprime solution of z0^p + z1^q + z2^r = 0 for a platonic p >= q >= r."""
    if not p >= q >= r >= 1:
        raise PreconditionViolated("expected p >= q >= r >= 1")
    if r == 1:
        x = _x()
        return [x, _const(QQ, 1), -(x ** p + 1)]
    if q == 2:
        tower = adjoin(QQ, "i", _x() ** 2 + 1)
        i = UPoly.const(tower, AlgNum.gen(tower))
        xp = _x(tower) ** p
        half = Fraction(1, 2)
        return [_x(tower), (xp + 1) * i * half, (xp - 1) * half]
    if (p, q, r) in shdata.triples():
        return [blk[0] for blk in shdata.load((p, q, r)).coords]
    raise NotPlatonic(f"({p}, {q}, {r}) is not platonic")


def sh_curve(spec):
    """SH-curve: the minimal coordinate of each block carries a surface solution."""
    if spec.kind != 2:
        raise PreconditionViolated("SH-curves are defined for Type 2 specs")
    cl = classify(spec)
    if not cl.sh_exists:
        raise NotPlatonic(f"minimal exponents {cl.platonic_triple} are not platonic")
    mins = [min(b) for b in spec.blocks]
    perm = _descending(mins)
    zs = _unpermute(sh_surface(*cl.platonic_triple), perm)
    tower = max((z.tower for z in zs), key=lambda t: t.height)
    coords = []
    for z, block in zip(zs, spec.blocks):
        j0 = block.index(min(block))
        coords.append([z.lift(tower) if j == j0 else _const(tower, 1) for j in range(len(block))])
    curve = Curve(coords, tower)
    _self_check(spec, curve, sh=True)
    return curve


def horizontal_curve(spec, route="pythagorean", max_degree=DEGREE_CAP):
    """Dispatch on the spec type; returns (curve, trace or None)."""
    if spec.kind == 1:
        return type1_horizontal(spec), None
    return lift_horizontal(spec, route, max_degree)
