"""Dense exact linear algebra over Q: RREF, rank, solving, nullspaces.

Matrices are lists of lists of Fractions; functions never mutate their
input.
"""

from __future__ import annotations

from fractions import Fraction

QQ = Fraction


def _copy(M):
    return [[QQ(x) for x in row] for row in M]


def rref(M):
    """Reduced row echelon form.

    Returns (R, pivot_cols, rank).  R is the unique RREF of M over Q.
    """
    R = _copy(M)
    if not R:
        return R, [], 0
    nrows, ncols = len(R), len(R[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if R[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(nrows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return R, pivots, len(pivots)


def rank(M) -> int:
    return rref(M)[2]


def rank_by_minors(M) -> int:
    """Independent rank oracle: largest k with a nonzero k x k minor.

    Exponential; intended for cross-checking rref on small matrices.
    """
    from itertools import combinations

    if not M or not M[0]:
        return 0
    nrows, ncols = len(M), len(M[0])
    for k in range(min(nrows, ncols), 0, -1):
        for rows in combinations(range(nrows), k):
            for cols in combinations(range(ncols), k):
                if det([[M[i][j] for j in cols] for i in rows]) != 0:
                    return k
    return 0


def det(M) -> Fraction:
    A = _copy(M)
    n = len(A)
    if n == 0:
        return QQ(1)
    sign = 1
    out = QQ(1)
    for c in range(n):
        pr = None
        for i in range(c, n):
            if A[i][c] != 0:
                pr = i
                break
        if pr is None:
            return QQ(0)
        if pr != c:
            A[c], A[pr] = A[pr], A[c]
            sign = -sign
        out *= A[c][c]
        inv = 1 / A[c][c]
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return out * sign


def solve(M, b):
    """One solution x of M x = b, or None if inconsistent."""
    if not M:
        return [] if not b else None
    nrows, ncols = len(M), len(M[0])
    aug = [list(map(QQ, row)) + [QQ(v)] for row, v in zip(M, b)]
    R, pivots, rk = rref(aug)
    if ncols in pivots:
        return None
    x = [QQ(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = R[i][ncols]
    return x


def invert(M):
    """Inverse of a square matrix, or None if singular."""
    n = len(M)
    aug = [list(map(QQ, M[i])) + [QQ(1 if j == i else 0) for j in range(n)] for i in range(n)]
    R, pivots, rk = rref(aug)
    if rk < n or pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in R[:n]]


def nullspace(M):
    """Basis of the right kernel, rows of the returned list."""
    if not M or not M[0]:
        return []
    ncols = len(M[0])
    R, pivots, rk = rref(M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [QQ(0)] * ncols
        v[fc] = QQ(1)
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][fc]
        basis.append(v)
    return basis


def mat_mul(A, B):
    if not A or not B:
        return []
    n, m, k = len(A), len(B[0]), len(B)
    return [[sum((A[i][t] * B[t][j] for t in range(k)), QQ(0)) for j in range(m)] for i in range(n)]


def mat_vec(A, v):
    return [sum((row[i] * v[i] for i in range(len(v))), QQ(0)) for row in A]
