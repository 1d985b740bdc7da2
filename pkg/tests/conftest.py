import sys

import sympy
from hypothesis import HealthCheck, settings

from trinomial.tower import Tower, adjoin
from trinomial.upoly import UPoly

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

QQ = Tower()


def P(*coeffs, tower=QQ):
    """UPoly over ``tower`` from rational coefficients, constant term first."""
    return UPoly.from_rationals(coeffs, tower)


def gaussian():
    return adjoin(QQ, "i", P(1, 0, 1))


def to_sympy(poly, var="x"):
    """Independent view of a UPoly: parse its printed form with sympy."""
    names = {n: sympy.Symbol(n) for n in poly.tower.names}
    names[var] = sympy.Symbol(var)
    expr = sympy.sympify(poly.format(var).replace("^", "**"), locals=names)
    return sympy.expand(expr)


def reduce_tower(expr, tower):
    """Reduce a sympy expression modulo the tower's defining polynomials."""
    for k in range(tower.height, 0, -1):
        name = tower.names[k - 1]
        g = sympy.Symbol(name)
        mod = sympy.sympify(_modulus_text(tower, k).replace("^", "**"), locals={n: sympy.Symbol(n) for n in tower.names})
        expr = sympy.rem(sympy.expand(expr), mod, g)
    return sympy.expand(expr)


def _modulus_text(tower, k):
    from trinomial.tower import format_poly

    lv = tower.levels[k - 1]
    return format_poly(lv.modulus, tower, lv.name, k - 1)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(f"criterion {n}: {results[n]}")
