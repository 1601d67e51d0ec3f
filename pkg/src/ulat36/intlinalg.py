"""Exact integer / rational matrix routines: HNF, determinants, inverses,
and an all-integer LLL working on Gram matrices.

Everything here is plain Python ints and Fractions; sizes in this project
are at most ~72 x 36, so asymptotics do not matter but exactness does.
"""

from __future__ import annotations

from fractions import Fraction


def identity_rows(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    """Integer (or Fraction) matrix product of row-lists."""
    ncols = len(b[0])
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def hnf(rows, ncols=None):
    """Canonical row Hermite normal form of the span of `rows`.

    Returns the nonzero rows: pivots positive, entries above each pivot
    reduced into [0, pivot). Two row sets span the same Z-module iff their
    HNFs are equal.
    """
    h, _ = hnf_with_transform(rows, ncols)
    return [r for r in h if any(r)]


def hnf_with_transform(rows, ncols=None):
    """Row HNF keeping zero rows, with the unimodular transform.

    Returns (H, U) with U * rows == H; rows of U opposite zero rows of H
    form a basis of the left kernel.
    """
    m = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if m else 0
    a = [list(r) for r in rows]
    u = identity_rows(m)
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, m) if a[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(a[i][c]))
            if i0 != r:
                a[r], a[i0] = a[i0], a[r]
                u[r], u[i0] = u[i0], u[r]
            clean = True
            p = a[r][c]
            for i in range(r + 1, m):
                if a[i][c]:
                    q = a[i][c] // p
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                        u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if a[i][c]:
                        clean = False
            if clean:
                break
        if r < m and a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
                u[r] = [-x for x in u[r]]
            p = a[r][c]
            for i in range(r):
                q = a[i][c] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            r += 1
        if r == m:
            break
    return a, u


def left_kernel(rows, ncols=None):
    """Basis of {x : x * rows == 0} over Z."""
    h, u = hnf_with_transform(rows, ncols)
    return [u[i] for i in range(len(h)) if not any(h[i])]


def bareiss_det(mat):
    """Exact determinant of a square integer matrix (fraction-free)."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(r) for r in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def invert(mat):
    """Exact inverse of a square integer/Fraction matrix, as Fraction rows."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def solve_right(mat, rhs_rows):
    """Solve X * mat == rhs_rows exactly (mat square nonsingular)."""
    inv = invert(mat)
    return mat_mul(rhs_rows, inv)


def gram_matrix(basis):
    bt = list(zip(*basis))
    return [[sum(x * y for x, y in zip(r1, r2)) for r2 in basis] for r1 in basis]


def lll_transform(gram, delta_num=99, delta_den=100):
    """All-integer LLL on a positive definite integer Gram matrix.

    Returns the unimodular transform U (row list) such that the basis
    U * B is LLL-reduced with parameter delta = delta_num/delta_den.
    Works entirely on the Gram matrix via the classical d_i / lambda_ij
    integral bookkeeping, so no fractions ever appear.
    """
    n = len(gram)
    u = identity_rows(n)
    if n <= 1:
        return u
    # d[0]=1, d[i] = determinant of leading i x i minor of the current Gram;
    # lam[i][j] = d[j+1-ish] * mu_ij in 0-based form: lam[i][j] corresponds to
    # basis vectors i>j, scaled by d[j+1]. Classical exact-division recurrences.
    d = [1] * (n + 1)
    lam = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            s = gram[i][j]
            for k in range(j):
                s = (d[k + 1] * s - lam[i][k] * lam[j][k]) // d[k]
            if j < i:
                lam[i][j] = s
            else:
                if s <= 0:
                    raise ValueError("Gram matrix not positive definite")
                d[i + 1] = s

    def red(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            u[k] = [x - q * y for x, y in zip(u[k], u[l])]
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    k = 1
    while k < n:
        red(k, k - 1)
        lk = lam[k][k - 1]
        if delta_den * (d[k - 1] * d[k + 1] + lk * lk) < delta_num * d[k] * d[k]:
            # swap rows k-1 and k
            u[k], u[k - 1] = u[k - 1], u[k]
            for j in range(k - 1):
                lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
            b = (d[k - 1] * d[k + 1] + lk * lk) // d[k]
            for i in range(k + 1, n):
                t = lam[i][k]
                lam[i][k] = (d[k + 1] * lam[i][k - 1] - lk * t) // d[k]
                lam[i][k - 1] = (b * t + lk * lam[i][k]) // d[k + 1]
            d[k] = b
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return u
