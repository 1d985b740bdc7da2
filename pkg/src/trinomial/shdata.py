"""Polynomial solutions of z0^p + z1^q + z2^2 = 0 with coprime z's, for the
three exceptional platonic triples.

They come from the classical invariant forms of the tetrahedral, octahedral
and icosahedral groups, dehomogenized.  Entries are plain curve-file text and
are re-checked by substitution every time they are loaded.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DatabaseCorrupt
from .model import TrinomialSpec

_ENTRIES = {
    # tetrahedral: w^2 = -3, h^2 = 12 w
    (3, 3, 2): """
ext w = w^2 + 3
ext h = h^2 - 12*w
var = x
T[0][1] = x^4 - 2*w*x^2 + 1
T[1][1] = -(x^4 + 2*w*x^2 + 1)
T[2][1] = h*(x^5 - x)
""",
    # octahedral, scaled so that a^4 = 108 t, b^3 = -t, c^2 = t with t = 27
    (4, 3, 2): """
ext s3 = s3^2 - 3
ext s2 = s2^2 - 2
var = x
T[0][1] = 3*s3*s2*(x^5 - x)
T[1][1] = -3*(x^8 + 14*x^4 + 1)
T[2][1] = 3*s3*(x^12 - 33*x^8 - 33*x^4 + 1)
""",
    # icosahedral forms in u = x, v = x + 1
    (5, 3, 2): """
var = x
T[0][1] = -1728*x*(x + 1)*(x^10 + 11*x^5*(x + 1)^5 - (x + 1)^10)
T[1][1] = 20736*(-(x^20 + (x + 1)^20) + 228*(x^15*(x + 1)^5 - x^5*(x + 1)^15) - 494*x^10*(x + 1)^10)
T[2][1] = 2985984*(x^30 + (x + 1)^30 + 522*(x^25*(x + 1)^5 - x^5*(x + 1)^25) - 10005*(x^20*(x + 1)^10 + x^10*(x + 1)^20))
""",
}


def triples():
    return sorted(_ENTRIES)


def entry_text(triple):
    return _ENTRIES[tuple(triple)].lstrip()


@lru_cache(maxsize=None)
def load(triple):
    """The verified surface curve for a sorted exceptional triple."""
    from .fileformat import parse_curve
    from .verify import is_sh, on_hypersurface

    triple = tuple(triple)
    if triple not in _ENTRIES:
        raise KeyError(triple)
    spec = TrinomialSpec.surface(*triple)
    try:
        curve = parse_curve(_ENTRIES[triple], spec)
        ok = on_hypersurface(spec, curve) and is_sh(spec, curve)
    except Exception as exc:  # any failure to load is corruption
        raise DatabaseCorrupt(f"entry {triple} does not load: {exc}") from exc
    if not ok:
        raise DatabaseCorrupt(f"entry {triple} fails verification")
    return curve
