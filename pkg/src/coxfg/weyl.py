"""Reflections, orbits and infinite families of (-1)-classes."""
from __future__ import annotations

from itertools import combinations, count as _count
from typing import Iterable

from . import intlin
from .config import SurfaceConfig, is_anticanonical, is_root
from .curves import (ClassQuery, effective_roots, enumerate_classes, minus_two_curves,
                     passes_recognition, root_span_rank, sorted_classes)
from .errors import InvalidRootError, InvariantError, NotInfiniteCaseError
from .lattice import DivisorClass, canonical, exceptional, intersect, k_degree, line, self_int


def simple_roots(r: int) -> list[DivisorClass]:
    """e_i - e_{i+1} for i < r, then l - e1 - e2 - e3 when r >= 3."""
    out = [exceptional(i, r) - exceptional(i + 1, r) for i in range(1, r)]
    if r >= 3:
        out.append(line(r) - exceptional(1, r) - exceptional(2, r) - exceptional(3, r))
    return out


def _check_root(R: DivisorClass) -> None:
    if not is_root(R):
        raise InvalidRootError(f"{R} is not a root (need R^2 = -2, R.K = 0)")


def reflect(x: DivisorClass, root: DivisorClass) -> DivisorClass:
    """x + (x.R) R: the reflection in R under the form of signature (1, r)."""
    _check_root(root)
    return x + intersect(x, root) * root


def orbit(x: DivisorClass, roots: Iterable[DivisorClass], limit: int
          ) -> tuple[list[DivisorClass], bool]:
    """Breadth-first closure of {x} under the reflections, stopped at `limit` classes.

    Frontiers are expanded in lexicographic order.  `exceeded` is True
    only when some class beyond the first `limit` exists.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    roots = sorted_classes(set(roots))
    for R in roots:
        _check_root(R)
    inv = (self_int(x), k_degree(x))
    seen = {x}
    frontier = [x]
    exceeded = False
    while frontier and not exceeded:
        nxt: list[DivisorClass] = []
        for c in sorted_classes(frontier):
            for R in roots:
                y = c + intersect(c, R) * R
                if y in seen:
                    continue
                if (self_int(y), k_degree(y)) != inv:
                    raise InvariantError(f"reflection changed invariants of {c}")
                if len(seen) >= limit:
                    exceeded = True
                    break
                seen.add(y)
                nxt.append(y)
            if exceeded:
                break
        frontier = nxt
    return sorted_classes(seen), exceeded


def _cremona_chain(r: int, n: int) -> list[DivisorClass]:
    """e_r, then repeated reflections raising the degree.

    Each step reflects in l - e_i - e_j - e_k for the three smallest
    multiplicities among the last nine points; their sum is below d0,
    so d0 grows strictly and the classes are distinct.  Staying on nine
    points keeps the growth quadratic instead of exponential.
    """
    out = []
    c = exceptional(r, r)
    last9 = range(r - 9, r)
    for _ in range(n):
        out.append(c)
        idx = sorted(last9, key=lambda i: (c.m[i], i))[:3]
        R = line(r) - sum((exceptional(i + 1, r) for i in idx), DivisorClass(0, (0,) * r))
        nxt = reflect(c, R)
        if nxt.d0 <= c.d0:
            raise InvariantError("Cremona step did not raise the degree")
        c = nxt
    return out


def _passing_class(config: SurfaceConfig, curves2) -> DivisorClass | None:
    b = 2
    while b <= 32:
        found = [c for c in enumerate_classes(config.r, ClassQuery(-1, -1, b))
                 if passes_recognition(c, curves2)]
        if found:
            return min(found, key=lambda c: (abs(c.d0), c.vector()))
        b *= 2
    return None


def _translation(config: SurfaceConfig, curves2) -> DivisorClass:
    """Integer beta in K-perp, orthogonal to every (-2)-curve, not a multiple of K."""
    r = config.r
    K = canonical(r)
    G = [1] + [-1] * r
    rows = [[g * v for g, v in zip(G, c.vector())] for c in [K] + sorted_classes(curves2)]
    for b in intlin.kernel(rows):
        if intlin.rank([b, list(K.vector())]) == 2:
            return DivisorClass.from_vector(b)
    raise NotInfiniteCaseError("no translation direction: the root span has full rank")


def classify_witness_case(config: SurfaceConfig) -> str:
    """'general', 'pencil', 'anticanonical' or 'none'."""
    r = config.r
    if config.general_position and r >= 9:
        return "general"
    if config.cubic_pencil:
        return "pencil" if root_span_rank(config) < 8 else "none"
    if is_anticanonical(config) and 9 - r <= 0:
        return "anticanonical"
    return "none"


def infinitude_witness(config: SurfaceConfig, count: int) -> list[DivisorClass]:
    """`count` distinct (-1)-classes passing the recognition rule.

    Raises NotInfiniteCaseError when the configuration is not one where
    an infinite family is produced.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    case = classify_witness_case(config)
    if case == "none":
        raise NotInfiniteCaseError("configuration is not classified as an infinite case")
    if count == 0:
        return []
    r = config.r
    if case == "general":
        out = _cremona_chain(r, count)
    else:
        curves2 = minus_two_curves(config)
        c0 = _passing_class(config, curves2)
        if c0 is None:
            raise NotInfiniteCaseError("no (-1)-class passes the recognition rule")
        if case == "pencil":
            beta = _translation(config, curves2)
            K = canonical(r)
            b2, cb = self_int(beta), intersect(c0, beta)
            out = []
            for t in _count():
                if len(out) == count:
                    break
                n = (t * t * b2 + 2 * t * cb) // 2
                out.append(c0 + t * beta + n * K)
        else:
            roots = effective_roots(config)
            pool = [R for R in _small_roots(r) if all(intersect(R, N) == 0 for N in curves2)
                    and R not in roots and -R not in roots]
            cls, exceeded = orbit(c0, pool, count)
            if not exceeded:
                raise NotInfiniteCaseError("orbit of a (-1)-curve closed up; no infinite family found")
            out = _bfs_order(c0, pool, count)
    _validate(config, out)
    return out


def _small_roots(r: int) -> list[DivisorClass]:
    out = []
    for i, j in combinations(range(1, r + 1), 2):
        out.append(exceptional(i, r) - exceptional(j, r))
    for t in combinations(range(1, r + 1), 3):
        out.append(line(r) - sum((exceptional(i, r) for i in t), DivisorClass(0, (0,) * r)))
    return out


def _bfs_order(x: DivisorClass, roots, limit: int) -> list[DivisorClass]:
    roots = sorted_classes(roots)
    seen = {x}
    order = [x]
    frontier = [x]
    while frontier and len(order) < limit:
        nxt = []
        for c in sorted_classes(frontier):
            for R in roots:
                y = c + intersect(c, R) * R
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
                    if len(order) == limit:
                        return order
        frontier = nxt
    return order


def _validate(config: SurfaceConfig, out: list[DivisorClass]) -> None:
    if len(set(out)) != len(out):
        raise InvariantError("witness contains duplicates")
    curves2 = None if config.general_position else minus_two_curves(config)
    for c in out:
        if self_int(c) != -1 or k_degree(c) != -1:
            raise InvariantError(f"witness {c} is not a (-1)-class")
        if curves2 is not None and not passes_recognition(c, curves2):
            raise InvariantError(f"witness {c} fails the recognition rule")
