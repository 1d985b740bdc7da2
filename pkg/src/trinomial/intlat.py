"""Integer subroutines: positive Bezout pairs, kernel lattices, semigroup sums."""

from __future__ import annotations

import math
from functools import reduce

from .errors import NotCoprime, NotRepresentable, ValidationError


def positive_bezout(R, M):
    """Pair (u, v) of positive integers with v*R - u*M == 1 and u minimal."""
    if R < 1 or M < 1:
        raise ValidationError("positive_bezout needs positive arguments")
    if math.gcd(R, M) != 1:
        raise NotCoprime(f"gcd({R}, {M}) != 1")
    # u*M = -1 (mod R)
    u = (-pow(M, -1, R)) % R if R > 1 else 0
    if u == 0:
        u = R
    v = (1 + u * M) // R
    return u, v


def xgcd(a, b):
    x, nx, y, ny = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
    if a < 0:
        a, x, y = -a, -x, -y
    return a, x, y


def kernel(rows, n):
    """Saturated basis of {w in Z^n : A w = 0} for the integer matrix ``rows``.

    Column operations bring A to echelon form while the same operations act
    on an identity matrix U; the columns of U past the last pivot span the
    kernel, and they form a primitive basis because U is unimodular.
    """
    A = [list(r) for r in rows]
    U = [[int(i == j) for j in range(n)] for i in range(n)]  # U[col] is a column vector

    def colop(i, j, a, b, c, d):
        # (col_i, col_j) <- (a*col_i + b*col_j, c*col_i + d*col_j)
        for r in A:
            r[i], r[j] = a * r[i] + b * r[j], c * r[i] + d * r[j]
        ui, uj = U[i], U[j]
        U[i] = [a * s + b * t for s, t in zip(ui, uj)]
        U[j] = [c * s + d * t for s, t in zip(ui, uj)]

    piv = 0
    for r in A:
        if piv == n:
            break
        for j in range(piv + 1, n):
            if r[j] == 0:
                continue
            a, b = r[piv], r[j]
            if a == 0:
                colop(piv, j, 0, 1, 1, 0)
                continue
            g, x, y = xgcd(a, b)
            colop(piv, j, x, y, -b // g, a // g)
        if r[piv] != 0:
            piv += 1
    return hermite_rows(U[piv:])


def hermite_rows(vectors):
    """Row Hermite normal form of the lattice spanned by ``vectors`` (zero rows dropped)."""
    M = [list(v) for v in vectors if any(v)]
    if not M:
        return []
    n = len(M[0])
    row = 0
    for col in range(n):
        # gather gcd of column entries at rows >= row into M[row]
        for i in range(row + 1, len(M)):
            if M[i][col] == 0:
                continue
            a, b = M[row][col], M[i][col]
            if a == 0:
                M[row], M[i] = M[i], M[row]
                continue
            g, x, y = xgcd(a, b)
            ri, rj = M[row], M[i]
            M[row] = [x * s + y * t for s, t in zip(ri, rj)]
            M[i] = [(-b // g) * s + (a // g) * t for s, t in zip(ri, rj)]
        if row < len(M) and M[row][col] != 0:
            if M[row][col] < 0:
                M[row] = [-s for s in M[row]]
            p = M[row][col]
            for k in range(row):
                q = M[k][col] // p
                if q:
                    M[k] = [s - q * t for s, t in zip(M[k], M[row])]
            row += 1
            if row == len(M):
                break
    return [tuple(r) for r in M[:row]]


def in_lattice(basis, v):
    """Membership of ``v`` in the integer span of ``basis``."""
    H = hermite_rows(basis)
    v = list(v)
    for r in H:
        col = next(i for i, s in enumerate(r) if s)
        if v[col] % r[col]:
            return False
        q = v[col] // r[col]
        v = [s - q * t for s, t in zip(v, r)]
    return not any(v)


def relation_rows(kind, blocks):
    """Rows of the exponent relations defining the torus weight lattice."""
    n = sum(len(b) for b in blocks)
    offsets = [0]
    for b in blocks:
        offsets.append(offsets[-1] + len(b))

    def row(pairs):
        r = [0] * n
        for i, sign in pairs:
            for j, e in enumerate(blocks[i]):
                r[offsets[i] + j] = sign * e
        return r

    if kind == 1:
        return [row([(0, 1)]), row([(1, 1)])], n
    return [row([(0, 1), (1, -1)]), row([(1, 1), (2, -1)])], n


def kernel_basis(spec):
    """Basis of the weight lattice of the complexity-one torus (rank n - 2)."""
    rows, n = relation_rows(spec.kind, spec.blocks)
    return kernel(rows, n)


def represent_in_semigroup(target, gens):
    """Lexicographically smallest b >= 1 with sum(b_j * gens_j) == target."""
    gens = list(gens)
    if not gens or any(g < 1 for g in gens):
        raise ValidationError("generators must be positive")
    g = reduce(math.gcd, gens)
    rest = target - sum(gens)
    if rest < 0 or rest % g:
        raise NotRepresentable(f"{target} is not a sum of {gens} with all multiplicities >= 1")
    # after subtracting one copy of each generator: free nonnegative representation
    # reach[k][t]: t is a nonnegative combination of gens[k:]
    reach = [[False] * (rest + 1) for _ in range(len(gens) + 1)]
    reach[len(gens)][0] = True
    for k in range(len(gens) - 1, -1, -1):
        gk, cur, nxt = gens[k], reach[k], reach[k + 1]
        for t in range(rest + 1):
            cur[t] = nxt[t] or (t >= gk and cur[t - gk])
    if not reach[0][rest]:
        raise NotRepresentable(f"{target} is not a sum of {gens} with all multiplicities >= 1")
    b = []
    t = rest
    for k, gk in enumerate(gens):
        extra = 0
        while not reach[k + 1][t - extra * gk]:
            extra += 1
        b.append(1 + extra)
        t -= extra * gk
    return tuple(b)
