"""Hilbert bases of pointed rational cones.

The basis of a cone C is computed face by face:

* a ray contributes its primitive generator;
* a simplicial cone contributes the lattice points of its half-open
  fundamental parallelepiped (enumerated through the Smith form),
  reduced;
* a Gorenstein cone (some lattice point v has height 1 over every
  facet) contributes v, if irreducible, together with the bases of its
  facets: any interior lattice point x has x - v in C;
* anything else is triangulated (pulling from the first ray) and the
  union of the simplicial candidates is reduced.

Optional symmetries (integer matrices permuting the rays) let one
facet per orbit stand for the whole orbit.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

import numpy as np

from . import intlin
from .errors import CapacityError, InvariantError

MAX_RANK = 11
MAX_SIMPLICES = 20_000   # work budget for triangulated faces


class _Lattice:
    """Saturated sublattice span(S) ∩ Z^n with coordinate maps."""

    def __init__(self, rows: np.ndarray):
        n = rows.shape[1]
        basis = intlin.saturate(intlin.as_rows(rows), n)
        self.B = np.array(basis, dtype=np.int64).reshape(len(basis), n)
        self.k = len(basis)
        cols = intlin.independent_rows(self.B.T)
        self.cols = cols
        inv, d = intlin.inverse_scaled(intlin.as_rows(self.B[:, cols]))
        self.inv = np.array(inv, dtype=np.int64)
        self.den = d

    def local(self, X: np.ndarray) -> np.ndarray:
        # c B_s = x_s on the chosen columns; A B_s = d I gives c = x_s A / d
        Y = X[:, self.cols] @ self.inv
        if (Y % self.den).any():
            raise InvariantError("point outside the face lattice")
        return Y // self.den

    def ambient(self, Y: np.ndarray) -> np.ndarray:
        return Y @ self.B


def _primitive_normal(X: np.ndarray, inside: np.ndarray) -> np.ndarray:
    """Primitive integer u with X u = 0, oriented so inside·u >= 0."""
    ker = intlin.kernel(intlin.as_rows(X), X.shape[1])
    if len(ker) != 1:
        raise InvariantError("facet does not have corank one")
    u = np.array(intlin.primitive(ker[0]), dtype=np.int64)
    h = inside @ u
    if (h < 0).any():
        u = -u
        h = -h
    if (h < 0).any():
        raise InvariantError("facet normal has mixed signs")
    return u


def _reduce(cand: np.ndarray, U: np.ndarray) -> np.ndarray:
    """Irreducible elements of a candidate set containing the Hilbert basis."""
    if len(cand) == 0:
        return cand
    cand = np.unique(cand, axis=0)
    H = cand @ U.T
    g = H.sum(axis=1)
    keep = g > 0
    cand, H, g = cand[keep], H[keep], g[keep]
    order = np.argsort(g, kind="stable")
    cand, H, g = cand[order], H[order], g[order]
    # in order of degree, x is reducible iff x - y lies in the cone for
    # some basis element y found before it
    basis_idx: list[int] = []
    hb = np.zeros((0, H.shape[1]), dtype=np.int64)
    for i in range(len(cand)):
        if len(hb) and ((H[i][None, :] - hb) >= 0).all(axis=1).any():
            continue
        basis_idx.append(i)
        hb = np.vstack([hb, H[i][None, :]])
    return cand[basis_idx]


def _parallelepiped(X: np.ndarray) -> np.ndarray:
    """Nonzero lattice points sum(l_i x_i), 0 <= l_i < 1, for a square nonsingular X."""
    k = X.shape[0]
    U, s, V = intlin.smith(intlin.as_rows(X))
    if len(s) != k:
        raise InvariantError("simplicial cone is degenerate")
    # row lattice of X equals that of diag(s) V^-1; Z^k / rows ≅ prod Z/s_i via z = c V^-1
    Vinv, vd = intlin.inverse_scaled(V)
    if vd != 1:
        raise InvariantError("Smith transform is not unimodular")
    Xinv, xd = intlin.inverse_scaled(intlin.as_rows(X))
    Xinv = [[Fraction(v, xd) for v in row] for row in Xinv]
    pts = []
    Xl = intlin.as_rows(X)
    for c in product(*[range(si) for si in s]):
        if not any(c):
            continue
        z = [sum(c[i] * Vinv[i][j] for i in range(k)) for j in range(k)]
        lam = [sum(z[i] * Xinv[i][j] for i in range(k)) for j in range(k)]
        lam = [l - (l.numerator // l.denominator) for l in lam]
        p = [sum(lam[i] * Xl[i][j] for i in range(k)) for j in range(k)]
        if any(v.denominator != 1 for v in p):
            raise InvariantError("parallelepiped point is not integral")
        pts.append([int(v) for v in p])
    return np.array(pts, dtype=np.int64).reshape(len(pts), k)


def _row_keys(M: np.ndarray) -> np.ndarray:
    M = np.ascontiguousarray(M, dtype=np.int64)
    return M.view(np.dtype((np.void, 8 * M.shape[1]))).ravel()


class HilbertSolver:
    """Hilbert basis of the cone spanned by `rays` (extreme, primitive).

    `facets` may give the Euclidean facet normals of the top cone; when
    omitted they are computed.  `symmetries` are integer matrices g with
    x -> g x permuting the rays.
    """

    def __init__(self, rays, facets=None, symmetries=()):
        self.rays = np.asarray(rays, dtype=np.int64)
        if self.rays.ndim != 2 or len(self.rays) == 0:
            raise ValueError("need at least one ray")
        self.n = self.rays.shape[1]
        self._keys = _row_keys(self.rays)
        self._korder = np.argsort(self._keys)
        self._ksorted = self._keys[self._korder]
        self.dim = intlin.rank(self.rays)
        if self.dim > MAX_RANK:
            raise CapacityError(f"rank {self.dim} exceeds the guard {MAX_RANK}")
        if facets is None:
            from .polyhedral import h_to_v
            # for a cone that is not full-dimensional the lineality of the dual
            # does not change which rays are tight, so the rays suffice
            facets = h_to_v(self.rays).rays
        self.top_normals = np.asarray(facets, dtype=np.int64).reshape(-1, self.n)
        self.sym = [np.asarray(g, dtype=np.int64) for g in symmetries]
        self.sym_perm = [self._perm(g) for g in self.sym]
        self.sym_perm = [(g, p) for g, p in zip(self.sym, self.sym_perm) if p is not None]
        self.memo: dict[frozenset, np.ndarray] = {}
        self.simplices = 0

    def _perm(self, g):
        ik = _row_keys(self.rays @ g.T)
        pos = np.searchsorted(self._ksorted, ik)
        pos[pos == len(self._ksorted)] = 0
        if (self._ksorted[pos] != ik).any():
            return None
        return self._korder[pos]

    # face bookkeeping ---------------------------------------------------

    def _facets_of(self, S: frozenset, k: int) -> list[frozenset]:
        idx = np.array(sorted(S), dtype=np.int64)
        X = self.rays[idx]
        vals = X @ self.top_normals.T
        seen = set()
        cands = []
        for j in range(vals.shape[1]):
            t = frozenset(int(i) for i in idx[vals[:, j] == 0])
            if len(t) == len(S) or len(t) < k - 1 or t in seen:
                continue
            seen.add(t)
            cands.append(t)
        out = []
        for t in cands:
            if intlin.rank(self.rays[sorted(t)]) == k - 1:
                out.append(t)
        return out

    def _stabilizer(self, S: frozenset):
        idx = np.array(sorted(S), dtype=np.int64)
        out = []
        for g, p in self.sym_perm:
            if frozenset(int(x) for x in p[idx]) == S:
                out.append((g, p))
        return out

    # main recursion -----------------------------------------------------

    def solve(self) -> np.ndarray:
        S = frozenset(range(len(self.rays)))
        hb = self._hb(S)
        return hb[np.lexsort(hb.T[::-1])]

    def _hb(self, S: frozenset) -> np.ndarray:
        if S in self.memo:
            return self.memo[S]
        idx = sorted(S)
        X = self.rays[idx]
        k = intlin.rank(X)
        if k == 1:
            res = X[:1].copy()
        else:
            lat = _Lattice(X)
            Xl = lat.local(X)
            facets = self._facets_of(S, k)
            normals = np.array([_primitive_normal(lat.local(self.rays[sorted(F)]), Xl)
                                for F in facets], dtype=np.int64)
            if len(S) == k:
                cand = np.vstack([Xl, _parallelepiped(Xl)])
                res = lat.ambient(_reduce(cand, normals))
            else:
                v = self._gorenstein_point(normals)
                if v is not None:
                    res = self._gorenstein(S, facets, lat, normals, v)
                else:
                    res = self._triangulated(S, lat, normals)
        self.memo[S] = res
        return res

    @staticmethod
    def _gorenstein_point(normals: np.ndarray):
        y = intlin.solve_rational(intlin.as_rows(normals.T), [1] * len(normals))
        if y is None or any(c.denominator != 1 for c in y):
            return None
        return np.array([int(c) for c in y], dtype=np.int64)

    def _gorenstein(self, S, facets, lat, normals, v):
        stab = self._stabilizer(S)
        parts = []
        todo = set(facets)
        while todo:
            F0 = min(todo, key=lambda F: sorted(F))
            base = self._hb(F0)
            # orbit of F0 with transporting matrices
            arr0 = np.array(sorted(F0), dtype=np.int64)
            orbit = {arr0.tobytes(): (arr0, np.eye(self.n, dtype=np.int64))}
            frontier = [arr0]
            while frontier:
                nxt = []
                for arr in frontier:
                    M = orbit[arr.tobytes()][1]
                    for g, p in stab:
                        img = np.sort(p[arr])
                        key = img.tobytes()
                        if key not in orbit:
                            orbit[key] = (img, g @ M)
                            nxt.append(img)
                frontier = nxt
            for arr, M in orbit.values():
                F = frozenset(arr.tolist())
                if F not in todo:
                    raise InvariantError("symmetry maps a facet outside the facet list")
                todo.discard(F)
                parts.append(base @ M.T)
        allv = np.unique(np.vstack(parts), axis=0)
        loc = lat.local(allv)
        vh = normals @ v
        if (vh != 1).any():
            raise InvariantError("Gorenstein point has wrong heights")
        H = loc @ normals.T
        # v is reducible iff v - h lies in the cone for some h already found
        if not ((1 - H) >= 0).all(axis=1).any():
            allv = np.vstack([allv, lat.ambient(v[None, :])])
        return allv

    def _triangulated(self, S, lat, normals):
        cand = []
        for simplex in self._triangulate(S):
            Xs = lat.local(self.rays[sorted(simplex)])
            cand.append(Xs)
            cand.append(_parallelepiped(Xs))
        cand = np.vstack(cand)
        return lat.ambient(_reduce(cand, normals))

    def _triangulate(self, S: frozenset) -> list[frozenset]:
        k = intlin.rank(self.rays[sorted(S)])
        if len(S) == k:
            return [S]
        s0 = min(S)
        out = []
        for F in self._facets_of(S, k):
            if s0 in F:
                continue
            for simplex in self._triangulate(F):
                out.append(simplex | {s0})
                self.simplices += 1
                if self.simplices > MAX_SIMPLICES:
                    raise CapacityError(
                        f"triangulation exceeds {MAX_SIMPLICES} simplices; cone too large")
        return out


def hilbert_basis_of_rays(rays, facets=None, symmetries=()) -> np.ndarray:
    return HilbertSolver(rays, facets, symmetries).solve()
