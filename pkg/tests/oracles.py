"""Independent brute-force oracles used by the tests.

Nothing here imports the search or cone code of the package; only plain
tuples and numpy are used.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

import numpy as np


def cs_degree_bound(r: int, s: int, k: int) -> int:
    """Largest |d0| with (3 d0 + k)^2 <= r (d0^2 - s), found by scanning (r <= 8)."""
    best = -1
    for d in range(-200, 201):
        if (3 * d + k) ** 2 <= r * (d * d - s):
            best = max(best, abs(d))
    assert (3 * 200 + k) ** 2 > r * (200 * 200 - s), "scan window too small"
    return best


def _halves(n: int, t: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    axes = np.meshgrid(*[np.arange(-t, t + 1)] * n, indexing="ij")
    return np.stack([a.ravel() for a in axes], axis=1).astype(np.int64)


def brute_force_classes(r: int, s: int, k: int, dmax: int) -> set[tuple[int, ...]]:
    """All (d0, m) with |d0| <= dmax, d0^2 - sum m^2 = s and -3 d0 + sum m = k.

    Meet in the middle: the multiplicities are split into two halves and
    the halves are joined on (sum, sum of squares).
    """
    out = set()
    n1 = r // 2
    n2 = r - n1
    for d0 in range(-dmax, dmax + 1):
        S = k + 3 * d0
        Q = d0 * d0 - s
        if Q < 0:
            continue
        t = isqrt(Q)
        A = _halves(n1, t)
        B = _halves(n2, t)
        A = A[(A * A).sum(axis=1) <= Q]
        B = B[(B * B).sum(axis=1) <= Q]
        index: dict[tuple[int, int], list[int]] = {}
        bs, bq = B.sum(axis=1), (B * B).sum(axis=1)
        for j in range(len(B)):
            index.setdefault((int(bs[j]), int(bq[j])), []).append(j)
        as_, aq = A.sum(axis=1), (A * A).sum(axis=1)
        for i in range(len(A)):
            for j in index.get((S - int(as_[i]), Q - int(aq[i])), ()):
                out.add((d0,) + tuple(int(x) for x in A[i]) + tuple(int(x) for x in B[j]))
    return out


def form(a, b) -> int:
    return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))


def rank_fraction(rows) -> int:
    """Rank by Gaussian elimination over the rationals."""
    M = [[Fraction(x) for x in row] for row in rows]
    if not M:
        return 0
    rank, ncols = 0, len(M[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(len(M)):
            if i != rank and M[i][c] != 0:
                f = M[i][c] / M[rank][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def cone_points(normals, n: int, box: int) -> np.ndarray:
    """Nonzero integer points of the box [-box, box]^n satisfying every normal."""
    X = _halves(n, box)
    X = X[np.any(X != 0, axis=1)]
    U = np.array(normals, dtype=np.int64).reshape(-1, n)
    return X[(X @ U.T >= 0).all(axis=1)]


def brute_hilbert_basis(rays, normals, box: int) -> set[tuple[int, ...]]:
    """Irreducible points of a pointed cone by generator elimination inside a box.

    Points are visited by increasing total height over the facets; a point
    is kept iff subtracting no earlier kept point leaves it in the cone.
    The box must contain the sum of all rays, which bounds every Hilbert
    basis element.
    """
    n = len(rays[0])
    U = np.array(normals, dtype=np.int64).reshape(-1, n)
    P = cone_points(normals, n, box)
    H = P @ U.T
    order = np.argsort(H.sum(axis=1), kind="stable")
    kept = np.zeros((0, U.shape[0]), dtype=np.int64)
    out = set()
    for i in order:
        if len(kept) and ((H[i] - kept) >= 0).all(axis=1).any():
            continue
        kept = np.vstack([kept, H[i]])
        out.add(tuple(int(x) for x in P[i]))
    return out
