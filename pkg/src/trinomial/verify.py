"""Independent symbolic checks on curves.

Every check that needs an inversion runs through :func:`over_branches`: if
the tower turns out to be reducible, it is split and the check is repeated
in each branch; the verdict is the conjunction over branches.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotOnHypersurface, NotSH, PreconditionViolated, ShapeMismatch, ZeroDivisor
from .model import Curve
from .tower import split
from .upoly import UPoly, gcd_monic, radical_and_d0


@dataclass
class VerifyReport:
    checks: dict = field(default_factory=dict)
    witness: dict = field(default_factory=dict)
    branches: list = field(default_factory=list)

    @property
    def ok(self):
        return all(self.checks.values())

    def lines(self):
        out = [f"{k} = {_fmt(v)}" for k, v in self.checks.items()]
        out += [f"{k} = {_fmt(v)}" for k, v in self.witness.items()]
        if len(self.branches) > 1:
            out.append(f"branches = {len(self.branches)}")
        return out


def _fmt(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(_fmt(x) for x in v)
    return str(v)


def over_branches(curve, check):
    """Run ``check(curve)`` in every dynamic-evaluation branch.

    Returns a list of (tower, result) pairs, one per branch.
    """
    pending = [curve]
    outcomes = []
    while pending:
        c = pending.pop()
        try:
            outcomes.append((c.tower, check(c)))
        except ZeroDivisor as zd:
            if zd.level > c.tower.height:
                raise
            a, b = split(c.tower, zd.level, zd.factor_coeffs)
            pending.extend([c.project(b), c.project(a)])
    return outcomes


def _all(curve, check):
    return all(r for _, r in over_branches(curve, check))


def nonzero_everywhere(poly):
    """True iff ``poly`` is nonzero in the current branch's every component.

    The first nonzero coefficient is inverted: success means it is a unit;
    a zero divisor propagates so the caller can split.
    """
    t = poly.tower
    for c in reversed(poly.coeffs):
        if c:
            t.inv(c, t.height)
            return True
    return False


def block_values(spec, curve):
    """The block monomials T_i^{l_i}(x) evaluated along the curve."""
    if curve.shape != spec.shape:
        raise ShapeMismatch(f"curve shape {curve.shape} does not match spec shape {spec.shape}")
    out = []
    for b, exps in zip(curve.coords, spec.blocks):
        v = UPoly.const(curve.tower, 1)
        for p, e in zip(b, exps):
            v = v * p ** e
        out.append(v)
    return out


def on_hypersurface(spec, curve):
    vals = block_values(spec, curve)
    total = vals[0] + vals[1]
    if spec.kind == 2:
        total = total + vals[2]
    else:
        total = total + 1
    return total.is_zero()


def _require_on(spec, curve):
    if not on_hypersurface(spec, curve):
        raise NotOnHypersurface("the curve does not satisfy the trinomial relation")


def is_horizontal(spec, curve):
    """Type 2: the ratio of the first two block values is non-constant.

    Type 1: the invariant T_1^{l_1} is non-constant along the curve.
    """
    _require_on(spec, curve)
    if any(p.is_zero() for b in curve.coords for p in b):
        return False

    def check(c):
        vals = block_values(spec, c)
        if spec.kind == 1:
            b1 = vals[0]
            return nonzero_everywhere(UPoly(b1.tower, (b1.tower.zero(),) + b1.coeffs[1:]))
        b0, b1 = vals[0], vals[1]
        return nonzero_everywhere(b0 * b1.derivative() - b0.derivative() * b1)

    return _all(curve, check)


def sh_report(spec, curve):
    """Coprimality of the three block values, with the common factor as witness."""
    _require_on(spec, curve)
    rep = VerifyReport()

    def check(c):
        vals = block_values(spec, c)
        if any(v.is_zero() for v in vals):
            return False, None
        g = gcd_monic(gcd_monic(vals[0], vals[1]), vals[2])
        return g.is_constant(), g

    outcomes = over_branches(curve, check)
    rep.branches = [(t, r[0]) for t, r in outcomes]
    rep.checks["is_sh"] = all(r[0] for _, r in outcomes)
    for _, (ok, g) in outcomes:
        if not ok:
            rep.witness["sh_witness"] = "0" if g is None else g.format(curve.var)
            break
    return rep


def is_sh(spec, curve):
    return sh_report(spec, curve).checks["is_sh"]


def _monic_or_zero(p):
    return p if p.is_zero() else p.monic()


def in_smooth_locus(spec, curve):
    """No parameter value is mapped to a singular point of X."""
    _require_on(spec, curve)
    if spec.kind == 1:
        return True

    def check(c):
        s = []
        for b, exps in zip(c.coords, spec.blocks):
            if any(p.is_zero() for p in b):
                s.append(UPoly(c.tower))
                continue
            acc = UPoly.const(c.tower, 1)
            for j in range(len(b)):
                for k in range(j + 1, len(b)):
                    acc = acc * gcd_monic(b[j], b[k])
                if exps[j] >= 2:
                    acc = acc * _monic_or_zero(b[j])
            s.append(acc)
        nonzero = [p for p in s if not p.is_zero()]
        if not nonzero:
            return False
        g = nonzero[0].monic()
        for p in nonzero[1:]:
            g = gcd_monic(g, p)
        return g.is_constant()

    return _all(curve, check)


def mason_stothers(a, b, c):
    """Check max deg <= d0(abc) - 1 for coprime a + b + c = 0."""
    a, b = a._common(b)
    a, c = a._common(c)
    b = b.lift(a.tower)
    if not (a + b + c).is_zero():
        raise PreconditionViolated("a + b + c is not zero")
    if a.is_constant() and b.is_constant() and c.is_constant():
        raise PreconditionViolated("all three polynomials are constant")
    curve = Curve([[a, b, c]], a.tower)

    def check(cv):
        pa, pb, pc = cv.coords[0]
        for p, q in ((pa, pb), (pa, pc), (pb, pc)):
            if p.is_zero() and q.is_zero():
                return None
            if not gcd_monic(p, q).is_constant():
                return None
        # pairwise coprime, so the distinct roots of abc are counted blockwise
        d0 = sum(radical_and_d0(p)[1] for p in (pa, pb, pc))
        return max(p.degree() for p in (pa, pb, pc)), d0

    outcomes = over_branches(curve, check)
    if any(r is None for _, r in outcomes):
        raise PreconditionViolated("a, b, c are not pairwise coprime")
    rep = VerifyReport()
    top, d0 = max((r for _, r in outcomes), key=lambda r: r[0] - r[1])
    rep.witness["max_degree"] = top
    rep.witness["d0_abc_minus_1"] = d0 - 1
    rep.checks["mason_stothers"] = all(t <= d - 1 for _, (t, d) in outcomes)
    rep.branches = [(t, r) for t, r in outcomes]
    return rep


def root_counts(curve):
    """Per branch: m_ij, the number of distinct roots of every coordinate."""
    def check(c):
        return [[radical_and_d0(p)[1] for p in b] for b in c.coords]

    return over_branches(curve, check)


def _inequalities(spec, m):
    total = sum(sum(r) for r in m)
    checks, slack = {}, {}
    lhs_all = 0
    for i, (row, exps) in enumerate(zip(m, spec.blocks), start=1):
        lhs = sum(e * k for e, k in zip(exps, row))
        lhs_all += lhs
        checks[f"r{i}"] = lhs <= total - 1
        slack[f"r{i}_slack"] = total - 1 - lhs
    checks["r4"] = lhs_all <= 3 * total - 3
    slack["r4_slack"] = 3 * total - 3 - lhs_all
    return checks, slack


def sh_inequality_report(spec, curve):
    """Degree bookkeeping forced on an SH-curve by the abc theorem.

    With m_ij the number of distinct roots of T_ij and M their total, each
    block satisfies sum_j l_ij m_ij <= M - 1, and the three together satisfy
    sum_ij l_ij m_ij <= 3M - 3.
    """
    if not is_sh(spec, curve):
        raise NotSH("curve is not an SH-curve")
    rep = VerifyReport()
    for k, (tower, m) in enumerate(root_counts(curve)):
        checks, slack = _inequalities(spec, m)
        if k == 0:
            rep.witness["m"] = [f"({','.join(map(str, r))})" for r in m]
            rep.checks.update(checks)
            rep.witness.update(slack)
        else:
            for name, ok in checks.items():
                rep.checks[name] = rep.checks[name] and ok
        rep.branches.append((tower, all(checks.values())))
    return rep


def full_report(spec, curve):
    """Everything the CLI prints for ``verify``."""
    rep = VerifyReport()
    on = on_hypersurface(spec, curve)
    rep.checks["on_hypersurface"] = on
    if not on:
        return rep
    rep.checks["nonconstant"] = curve.is_nonconstant()
    rep.checks["is_horizontal"] = is_horizontal(spec, curve)
    if spec.kind == 2:
        sh = sh_report(spec, curve)
        rep.checks.update(sh.checks)
        rep.witness.update(sh.witness)
        rep.checks["in_smooth_locus"] = in_smooth_locus(spec, curve)
        if sh.checks["is_sh"] and curve.is_nonconstant():
            vals = block_values(spec, curve)
            ms = mason_stothers(*vals)
            rep.checks.update(ms.checks)
            rep.witness.update(ms.witness)
            ineq = sh_inequality_report(spec, curve)
            rep.checks.update(ineq.checks)
            rep.witness.update(ineq.witness)
    else:
        rep.checks["in_smooth_locus"] = True
    return rep
