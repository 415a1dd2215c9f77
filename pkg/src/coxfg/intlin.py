"""Exact integer linear algebra on small matrices.

Matrices are lists of rows of Python ints unless noted.  The routines
that accept numpy arrays use int64 only for screening and fall back to
Python integers whenever a result has to be certified.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

_P = 2_147_483_629  # prime below 2**31, keeps products inside int64

Matrix = list[list[int]]


def as_rows(M) -> Matrix:
    return [[int(x) for x in row] for row in M]


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide by the gcd of the entries (the zero vector is returned as is)."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g <= 1:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)


def primitive_rows(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return M
    g = np.gcd.reduce(M, axis=1)
    g[g == 0] = 1
    return M // g[:, None]


def _modp_pivots(M: np.ndarray) -> list[int]:
    """Row indices of a maximal independent set of rows modulo a prime."""
    A = np.mod(np.asarray(M, dtype=np.int64), _P)
    m, n = A.shape
    basis: list[np.ndarray] = []   # reduced rows, each with a leading column
    leads: list[int] = []
    chosen: list[int] = []
    # column-wise elimination over all rows at once
    W = A.copy()
    alive = np.ones(m, dtype=bool)
    for col in range(n):
        cand = np.nonzero(alive & (W[:, col] != 0))[0]
        if cand.size == 0:
            continue
        piv = int(cand[0])
        chosen.append(piv)
        alive[piv] = False
        prow = W[piv].copy()
        inv = pow(int(prow[col]), _P - 2, _P)
        prow = (prow * inv) % _P
        f = W[:, col].copy()
        f[~alive] = 0
        # W -= f * prow  (mod p), done in two halves to stay inside int64
        W = (W - (f[:, None] * prow[None, :]) % _P) % _P
        basis.append(prow)
        leads.append(col)
        if len(chosen) == min(m, n):
            break
    return chosen


def rank(M) -> int:
    """Exact rank over the rationals."""
    return len(independent_rows(M))


def independent_rows(M) -> list[int]:
    """Indices of rows forming a basis of the row space (exact).

    A modular elimination proposes the rows; the proposal is then
    certified by checking that the integer kernel of the chosen rows
    annihilates every row.  Rows that escape are added and the check is
    repeated.
    """
    A = np.asarray(M, dtype=object)
    if A.ndim != 2 or A.shape[0] == 0:
        return []
    m, n = A.shape
    try:
        A64 = np.asarray(M, dtype=np.int64)
        small = bool(np.abs(A64).max() < 2**31)
    except OverflowError:
        small = False
    if small:
        chosen = _modp_pivots(A64)
    else:
        chosen = _bareiss_pivots(as_rows(M))
    while True:
        if len(chosen) == n:
            return sorted(chosen)
        N = kernel([as_rows(A[i:i + 1])[0] for i in chosen]) if chosen else \
            [[int(i == j) for j in range(n)] for i in range(n)]
        Nm = np.array(N, dtype=object).T  # n x k
        prod = A.dot(Nm)
        bad = [i for i in range(m) if any(x != 0 for x in prod[i])]
        if not bad:
            return sorted(chosen)
        chosen.append(bad[0])


def _bareiss_pivots(M: Matrix) -> list[int]:
    rows = [list(r) for r in M]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    order = list(range(m))
    chosen: list[int] = []
    prev = 1
    k = 0
    for col in range(n):
        p = next((i for i in range(k, m) if rows[i][col] != 0), None)
        if p is None:
            continue
        rows[k], rows[p] = rows[p], rows[k]
        order[k], order[p] = order[p], order[k]
        piv = rows[k][col]
        for i in range(k + 1, m):
            a = rows[i][col]
            rows[i] = [(piv * rows[i][j] - a * rows[k][j]) // prev for j in range(n)]
        prev = piv
        chosen.append(order[k])
        k += 1
        if k == m:
            break
    return chosen


def kernel(M: Matrix, ncols: int | None = None) -> Matrix:
    """Basis (as rows) of the integer lattice {x : M x = 0}.

    The basis is saturated: every integer solution is an integer
    combination of the returned vectors.
    """
    M = as_rows(M)
    n = len(M[0]) if M else (ncols or 0)
    # column operations on [M; I]
    cols = [[M[i][j] for i in range(len(M))] + [int(k == j) for k in range(n)]
            for j in range(n)]
    m = len(M)
    r = 0
    for i in range(m):
        # gcd-reduce column entries in row i over columns r..n-1
        while True:
            nz = [j for j in range(r, n) if cols[j][i] != 0]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(cols[j][i]))
            cols[r], cols[j0] = cols[j0], cols[r]
            done = True
            for j in range(r + 1, n):
                if cols[j][i] != 0:
                    q = cols[j][i] // cols[r][i]
                    cols[j] = [a - q * b for a, b in zip(cols[j], cols[r])]
                    if cols[j][i] != 0:
                        done = False
            if done:
                break
        if any(cols[j][i] != 0 for j in range(r, n)):
            r += 1
    return [c[m:] for c in cols[r:]]


def saturate(vectors: Matrix, n: int) -> Matrix:
    """Basis of the saturated lattice span(vectors) ∩ Z^n."""
    if not vectors:
        return []
    comp = kernel(vectors, n)
    if not comp:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    return kernel(comp, n)


def solve_rational(B: Matrix, x: Sequence[int]) -> list[Fraction] | None:
    """Coefficients y with sum_i y_i B[i] = x, or None.

    B holds independent rows.
    """
    k = len(B)
    n = len(x)
    # augmented system: columns are B rows
    aug = [[Fraction(B[j][i]) for j in range(k)] + [Fraction(x[i])] for i in range(n)]
    piv_cols = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if any(aug[i][k] != 0 for i in range(r, n)):
        return None
    y = [Fraction(0)] * k
    for i, c in enumerate(piv_cols):
        y[c] = aug[i][k]
    return y


def inverse_scaled(B: Matrix) -> tuple[Matrix, int]:
    """Return (A, d) with A·B = d·I, d > 0, for a square nonsingular B."""
    n = len(B)
    aug = [[Fraction(B[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if p is None:
            raise ValueError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [v / pv for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    inv = [row[n:] for row in aug]
    d = 1
    for row in inv:
        for v in row:
            d = d * v.denominator // gcd(d, v.denominator)
    return [[int(v * d) for v in row] for row in inv], d


def smith(M: Matrix) -> tuple[Matrix, list[int], Matrix]:
    """Smith form U·M·V = diag(s) with unimodular U (m x m) and V (n x n).

    Returns (U, s, V); s lists the nonzero invariant factors in order.
    """
    A = as_rows(M)
    m = len(A)
    n = len(A[0]) if A else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row dst -= q * row src
        A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    s: list[int] = []
    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j] != 0]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            changed = False
            for i in range(t + 1, m):
                if A[i][t] != 0:
                    q = A[i][t] // A[t][t]
                    add_row(i, t, q)
                    if A[i][t] != 0:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, n):
                if A[t][j] != 0:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, q)
                    if A[t][j] != 0:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            # divisibility of the remaining block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t] != 0), None)
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
            U[t] = [a + b for a, b in zip(U[t], U[bad[0]])]
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        s.append(A[t][t])
        t += 1
    return U, s, V


def det(M: Matrix) -> int:
    """Exact determinant via fraction-free elimination."""
    A = [list(r) for r in as_rows(M)]
    n = len(A)
    sign = 1
    prev = 1
    for k in range(n):
        p = next((i for i in range(k, n) if A[i][k] != 0), None)
        if p is None:
            return 0
        if p != k:
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1
