"""Exact polyhedral cones over the integers.

A cone is either given by generators (V-form) or by inequalities
a.x >= 0 (H-form).  Conversion uses the double description method with
integer rays and bitset incidence.  When there are many more
inequalities than expected rays, an adjacency walk over the output is
used instead: find one extreme ray, then move along the edges leaving
it, obtained from a small double description of its tight inequalities.

Everything works on numpy int64 arrays; magnitudes are checked so that
no product can wrap.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import intlin
from .errors import CapacityError

_SAFE = 2**62


def _guard(M: np.ndarray, what: str = "value") -> None:
    if M.size and int(np.abs(M).max()) >= 2**31:
        raise CapacityError(f"{what} too large for exact int64 double description")


def lex_order(A: np.ndarray) -> np.ndarray:
    if len(A) == 0:
        return np.zeros(0, dtype=np.int64)
    return np.lexsort(A.T[::-1])


def unique_rows(M: np.ndarray) -> np.ndarray:
    if len(M) == 0:
        return M
    return np.unique(M, axis=0)


@dataclass
class HResult:
    rays: np.ndarray        # extreme rays of the pointed part, primitive, lex-sorted
    lineality: np.ndarray   # integer basis of {x : A x = 0}


def _bits(n: int) -> int:
    return max(1, (n + 63) // 64)


def _dd_pointed(A: np.ndarray) -> np.ndarray:
    """Extreme rays of {x : A x >= 0} for A of full column rank d."""
    m, d = A.shape
    order = lex_order(A)
    A = A[order]
    # initial simplicial cone from d independent rows, earliest in lex order
    basis_rows: list[int] = []
    for i in range(m):
        if intlin.rank(A[basis_rows + [i]]) == len(basis_rows) + 1:
            basis_rows.append(i)
            if len(basis_rows) == d:
                break
    B = intlin.as_rows(A[basis_rows])
    inv, _ = intlin.inverse_scaled(B)
    R = intlin.primitive_rows(np.array(inv, dtype=np.int64).T)
    rest = [i for i in range(m) if i not in set(basis_rows)]
    A = np.vstack([A[basis_rows], A[rest]]) if rest else A[basis_rows]
    W = _bits(m)
    if _nb is not None:
        _guard(R, "initial rays")
        out, _, status = _dd_kernel(np.ascontiguousarray(A), np.ascontiguousarray(R), W)
        if status:
            raise CapacityError("ray combination would overflow int64")
        return out
    Z = np.zeros((d, W), dtype=np.uint64)
    tight = (R @ A[:d].T) == 0
    for t in range(d):
        Z[tight[:, t], t // 64] |= np.uint64(1) << np.uint64(t % 64)
    for t in range(d, m):
        a = A[t]
        s = R @ a
        pos = s > 0
        neg = s < 0
        bit_w, bit = t // 64, np.uint64(1) << np.uint64(t % 64)
        if not neg.any():
            Z[s == 0, bit_w] |= bit
            continue
        if not pos.any():
            keep = s == 0
            R, Z = R[keep], Z[keep]
            Z[:, bit_w] |= bit
            continue
        w = bit_w + 1
        P = np.nonzero(pos)[0]
        N = np.nonzero(neg)[0]
        Zw = Z[:, :w]
        new_r, new_z = _combine(R, Zw, s, P, N, d)
        keep = ~neg
        R = R[keep]
        Z = Z[keep]
        Z[s[keep] == 0, bit_w] |= bit
        if len(new_r):
            nz = np.zeros((len(new_r), W), dtype=np.uint64)
            nz[:, :w] = new_z
            nz[:, bit_w] |= bit
            R = np.vstack([R, new_r])
            Z = np.vstack([Z, nz])
            _guard(R, "ray entries")
    return R


try:
    import numba as _nb
except ImportError:  # pragma: no cover
    _nb = None

if _nb is not None:
    @_nb.njit(cache=True)
    def _gcd(a, b):
        a = abs(a)
        b = abs(b)
        while b:
            a, b = b, a % b
        return a

    @_nb.njit(cache=True)
    def _dd_kernel(A, R0, W):
        """Double description over rows d..m-1 of A; R0 spans the cone of rows 0..d-1.

        Returns (rays, count, status); status 1 flags a magnitude overflow.
        """
        m, d = A.shape
        cap = max(64, 4 * R0.shape[0])
        R = np.zeros((cap, d), np.int64)
        Z = np.zeros((cap, W), np.uint64)
        nr = R0.shape[0]
        for i in range(nr):
            for j in range(d):
                R[i, j] = R0[i, j]
            for t in range(d):
                v = 0
                for j in range(d):
                    v += R0[i, j] * A[t, j]
                if v == 0:
                    Z[i, t // 64] |= np.uint64(1) << np.uint64(t % 64)
        s = np.zeros(cap, np.int64)
        I = np.zeros(W, np.uint64)
        for t in range(d, m):
            if s.shape[0] < cap:
                s = np.zeros(cap, np.int64)
            npos = 0
            nneg = 0
            for i in range(nr):
                v = 0
                for j in range(d):
                    v += R[i, j] * A[t, j]
                s[i] = v
                if v > 0:
                    npos += 1
                elif v < 0:
                    nneg += 1
            bw = t // 64
            bit = np.uint64(1) << np.uint64(t % 64)
            ww = bw + 1
            newR = np.zeros((16, d), np.int64)
            newZ = np.zeros((16, W), np.uint64)
            nn = 0
            if nneg > 0 and npos > 0:
                Pi = np.empty(npos, np.int64)
                Ni = np.empty(nneg, np.int64)
                a1 = 0
                a2 = 0
                for i in range(nr):
                    if s[i] > 0:
                        Pi[a1] = i
                        a1 += 1
                    elif s[i] < 0:
                        Ni[a2] = i
                        a2 += 1
                for pa in range(npos):
                    p = Pi[pa]
                    for na in range(nneg):
                        n = Ni[na]
                        c = 0
                        for w in range(ww):
                            x = Z[p, w] & Z[n, w]
                            I[w] = x
                            while x:
                                x &= x - np.uint64(1)
                                c += 1
                        if c < d - 2:
                            continue
                        covered = False
                        for q in range(nr):
                            if q == p or q == n:
                                continue
                            ok = True
                            for w in range(ww):
                                if (Z[q, w] & I[w]) != I[w]:
                                    ok = False
                                    break
                            if ok:
                                covered = True
                                break
                        if covered:
                            continue
                        if nn == newR.shape[0]:
                            tmpR = np.zeros((2 * nn, d), np.int64)
                            tmpZ = np.zeros((2 * nn, W), np.uint64)
                            tmpR[:nn] = newR
                            tmpZ[:nn] = newZ
                            newR = tmpR
                            newZ = tmpZ
                        g = 0
                        for j in range(d):
                            a1 = s[p] * R[n, j]
                            a2 = s[n] * R[p, j]
                            if abs(a1) > 2**61 or abs(a2) > 2**61:
                                return R[:0], 0, 1
                            v = a1 - a2
                            newR[nn, j] = v
                            g = _gcd(g, v)
                        if g > 1:
                            for j in range(d):
                                newR[nn, j] //= g
                        for w in range(ww):
                            newZ[nn, w] = I[w]
                        newZ[nn, bw] |= bit
                        nn += 1
            # compact: keep s >= 0, then append new rays
            k = 0
            for i in range(nr):
                if s[i] >= 0:
                    if k != i:
                        for j in range(d):
                            R[k, j] = R[i, j]
                        for w in range(W):
                            Z[k, w] = Z[i, w]
                    if s[i] == 0:
                        Z[k, bw] |= bit
                    k += 1
            if k + nn > cap:
                while k + nn > cap:
                    cap *= 2
                R2 = np.zeros((cap, d), np.int64)
                Z2 = np.zeros((cap, W), np.uint64)
                R2[:k] = R[:k]
                Z2[:k] = Z[:k]
                R = R2
                Z = Z2
            for i in range(nn):
                for j in range(d):
                    R[k + i, j] = newR[i, j]
                for w in range(W):
                    Z[k + i, w] = newZ[i, w]
            nr = k + nn
        return R[:nr].copy(), nr, 0


def _combine(R, Zw, s, P, N, d):
    """New rays from adjacent pairs (p in P, n in N); numpy fallback path."""
    Zp, Zn = Zw[P], Zw[N]
    W = Zw.shape[1]
    step = max(1, 2_000_000 // max(1, len(N) * W))
    cand_p, cand_n, cand_i = [], [], []
    for lo in range(0, len(P), step):
        I = Zp[lo:lo + step, None, :] & Zn[None, :, :]
        cnt = np.bitwise_count(I).sum(axis=2, dtype=np.int64)
        ii, jj = np.nonzero(cnt >= d - 2)
        if len(ii):
            cand_p.append(P[lo + ii])
            cand_n.append(N[jj])
            cand_i.append(I[ii, jj])
    if not cand_p:
        return np.zeros((0, R.shape[1]), np.int64), np.zeros((0, W), np.uint64)
    cp = np.concatenate(cand_p)
    cn = np.concatenate(cand_n)
    ci = np.concatenate(cand_i)
    # adjacency: no third ray is tight on everything p and n share
    nr = len(Zw)
    step = max(1, 4_000_000 // max(1, nr * W))
    ok = np.zeros(len(cp), dtype=bool)
    for lo in range(0, len(cp), step):
        Ic = ci[lo:lo + step]
        cover = ((Zw[None, :, :] & Ic[:, None, :]) == Ic[:, None, :]).all(axis=2)
        ok[lo:lo + step] = cover.sum(axis=1) == 2
    cp, cn, ci = cp[ok], cn[ok], ci[ok]
    if len(cp) == 0:
        return np.zeros((0, R.shape[1]), np.int64), np.zeros((0, W), np.uint64)
    sp = s[cp][:, None]
    sn = s[cn][:, None]
    if int(np.abs(R).max()) * int(np.abs(s).max()) * 2 >= _SAFE:
        raise CapacityError("ray combination would overflow int64")
    new = sp * R[cn] - sn * R[cp]
    new = intlin.primitive_rows(new)
    return new, ci


def h_to_v(A) -> HResult:
    """Extreme rays and lineality of {x : A x >= 0}."""
    A = np.asarray(A, dtype=np.int64)
    if A.ndim != 2:
        raise ValueError("constraint matrix must be 2-dimensional")
    n = A.shape[1]
    A = unique_rows(intlin.primitive_rows(A[np.any(A != 0, axis=1)]))
    if len(A) == 0:
        eye = np.eye(n, dtype=np.int64)
        return HResult(np.zeros((0, n), np.int64), eye)
    _guard(A, "constraint entries")
    lin = intlin.kernel(intlin.as_rows(A))
    lin = np.array(lin, dtype=np.int64).reshape(len(lin), n)
    idx = intlin.independent_rows(A)
    Bq = A[idx]                       # basis of the row space
    M = A @ Bq.T                      # constraints in coordinates y, x = Bq^T y
    _guard(M, "reduced constraint entries")
    if len(idx) == 1:
        ys = []
        if (M[:, 0] >= 0).all():
            ys.append([1])
        if (M[:, 0] <= 0).all():
            ys.append([-1])
        Y = np.array(ys, dtype=np.int64).reshape(len(ys), 1)
    elif _prefer_walk(M):
        Y = adjacency_walk(M)
    else:
        Y = _dd_pointed(M)
    rays = intlin.primitive_rows(Y @ Bq) if len(Y) else np.zeros((0, n), np.int64)
    rays = unique_rows(rays)
    return HResult(rays[lex_order(rays)], lin)


def _prefer_walk(M: np.ndarray) -> bool:
    m, d = M.shape
    return d >= 7 and m > 2000


# adjacency walk ------------------------------------------------------------

def _first_ray(M: np.ndarray) -> np.ndarray:
    """One extreme ray of the pointed cone {y : M y >= 0} (M of full column rank).

    Cutting-plane double description: solve on a growing subset of the
    constraints until one of the rays obtained satisfies them all; such a
    ray is extreme for the full cone too.
    """
    m, d = M.shape
    order = lex_order(M)
    chosen: list[int] = []
    for i in order:
        if intlin.rank(M[chosen + [int(i)]]) == len(chosen) + 1:
            chosen.append(int(i))
            if len(chosen) == d:
                break
    while True:
        rays = _dd_pointed(M[chosen])
        vals = M @ rays.T
        good = np.nonzero((vals >= 0).all(axis=0))[0]
        if len(good):
            return rays[good[0]]
        add = set()
        for j in range(rays.shape[0]):
            add.add(int(np.argmin(vals[:, j])))
        chosen = sorted(set(chosen) | add)


def _neighbors(M: np.ndarray, e: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Other ends of the edges leaving e in the directions Y (taken mod e)."""
    ae = M @ e
    mask = ae > 0
    den = ae[mask]
    num = -(M[mask] @ Y.T)                       # one column per direction
    guess = np.argmax(num / den[:, None], axis=0)
    out = []
    for k in range(Y.shape[0]):
        col = num[:, k]
        j = int(guess[k])
        while True:
            better = col * den[j] > col[j] * den
            if not better.any():
                break
            j = int(np.nonzero(better)[0][0])
        out.append(intlin.primitive(den[j] * Y[k] + col[j] * e))
    return np.array(out, dtype=np.int64)


def adjacency_walk(M: np.ndarray) -> np.ndarray:
    """Extreme rays of the pointed full-dimensional cone {y : M y >= 0}.

    Graph search over extreme rays: the edges at a ray e are the extreme
    rays, modulo e, of the cone cut out by the inequalities tight at e.
    """
    m, d = M.shape
    start = _first_ray(M)
    seen = {tuple(int(x) for x in start)}
    queue = [start]
    out = [start]
    while queue:
        e = queue.pop()
        T = M[(M @ e) == 0]
        local = h_to_v(T)
        # local rays are directions modulo span(e); lineality is span(e)
        if len(local.rays) == 0:
            continue
        for nb in _neighbors(M, e, local.rays):
            key = tuple(int(x) for x in nb)
            if key not in seen:
                seen.add(key)
                out.append(nb)
                queue.append(nb)
    return np.array(out, dtype=np.int64)


def v_to_h(G) -> HResult:
    """Facet normals of cone(G) (Euclidean pairing) via the dual description."""
    return h_to_v(G)
