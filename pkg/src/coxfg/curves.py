"""(-1)- and (-2)-classes: enumeration and the curve sets of a configuration."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Iterator

from . import intlin
from .config import SurfaceConfig, declared_roots, is_root
from .errors import (InfiniteCaseError, InvalidConfigError, UnboundedSearchError,
                     WindowExceededError)
from .lattice import DivisorClass, canonical, intersect

DEFAULT_WINDOW = 64


@dataclass(frozen=True)
class ClassQuery:
    self_int: int
    k_degree: int
    degree_bound: int | None = None

    def __post_init__(self):
        if (self.self_int, self.k_degree) not in ((-1, -1), (-2, 0)):
            raise ValueError("supported queries: (-1, -1) and (-2, 0)")
        if self.degree_bound is not None and self.degree_bound < 0:
            raise ValueError("degree_bound must be nonnegative")


MINUS_ONE = ClassQuery(-1, -1)
ROOT = ClassQuery(-2, 0)


def degree_range(r: int, s: int, k: int, bound: int | None = None) -> range:
    """Integer d0 allowed by (3 d0 + k)^2 <= r (d0^2 - s), clipped to |d0| <= bound.

    For r <= 8 the allowed set is a finite interval; for r >= 9 a bound
    is required.
    """
    a = 9 - r
    if a > 0:
        # a d0^2 + 6k d0 + (k^2 + r s) <= 0
        disc = 36 * k * k - 4 * a * (k * k + r * s)
        if disc < 0:
            return range(0)
        sq = isqrt(disc)
        lo = (-6 * k - sq) // (2 * a) - 1
        hi = (-6 * k + sq) // (2 * a) + 1

        def f(d):
            return a * d * d + 6 * k * d + k * k + r * s
        while lo <= hi and f(lo) > 0:
            lo += 1
        while hi >= lo and f(hi) > 0:
            hi -= 1
        if bound is not None:
            lo, hi = max(lo, -bound), min(hi, bound)
        return range(lo, hi + 1)
    if bound is None:
        raise UnboundedSearchError(f"r={r} needs a degree bound")
    return range(-bound, bound + 1)


def _vectors(n: int, S: int, Q: int) -> Iterator[tuple[int, ...]]:
    """All integer n-tuples with sum S and sum of squares Q."""
    if n == 0:
        if S == 0 and Q == 0:
            yield ()
        return
    if Q < 0 or S * S > n * Q or (S - Q) % 2:
        return
    if n == 1:
        if S * S == Q:
            yield (S,)
        return
    t = isqrt(Q)
    for x in range(-t, t + 1):
        S2, Q2 = S - x, Q - x * x
        if S2 * S2 > (n - 1) * Q2:
            continue
        for rest in _vectors(n - 1, S2, Q2):
            yield (x,) + rest


def enumerate_classes(r: int, q: ClassQuery) -> frozenset[DivisorClass]:
    """Every class with D^2 = q.self_int and D.K = q.k_degree in the degree window."""
    out = set()
    for d0 in degree_range(r, q.self_int, q.k_degree, q.degree_bound):
        S = q.k_degree + 3 * d0
        Q = d0 * d0 - q.self_int
        for m in _vectors(r, S, Q):
            out.add(DivisorClass(d0, m))
    return frozenset(out)


def sorted_classes(classes: Iterable[DivisorClass]) -> list[DivisorClass]:
    return sorted(classes, key=lambda c: c.vector())


def effective_roots(config: SurfaceConfig, window: int = DEFAULT_WINDOW) -> frozenset[DivisorClass]:
    """Closure of the declared roots under sums that are again roots.

    For r >= 9 the closure is confined to |d0| <= window.
    """
    found = set(declared_roots(config))
    queue = sorted_classes(found)
    order = list(queue)
    while queue:
        R = queue.pop(0)
        for T in list(order):
            S = R + T
            if S in found or not is_root(S):
                continue
            if config.r >= 9 and abs(S.d0) > window:
                raise WindowExceededError(
                    f"root closure left the window |d0| <= {window}", sorted_classes(found))
            found.add(S)
            order.append(S)
            queue.append(S)
    for R in found:
        if -R in found:
            raise InvalidConfigError(f"both {R} and its negative are declared effective")
    return frozenset(found)


def indecomposable(roots: Iterable[DivisorClass]) -> frozenset[DivisorClass]:
    roots = set(roots)
    out = set()
    for R in roots:
        if not any((R - T) in roots for T in roots if T != R):
            out.add(R)
    return frozenset(out)


def _is_negative_definite(gram: list[list[int]]) -> bool:
    n = len(gram)
    neg = [[-x for x in row] for row in gram]
    return all(intlin.det([row[:k] for row in neg[:k]]) > 0 for k in range(1, n + 1))


def _components(simple: list[DivisorClass]) -> list[list[DivisorClass]]:
    comps: list[list[DivisorClass]] = []
    seen: set[DivisorClass] = set()
    for s in simple:
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            a = stack.pop()
            comp.append(a)
            for b in simple:
                if b not in seen and intersect(a, b) != 0:
                    seen.add(b)
                    stack.append(b)
        comps.append(sorted_classes(comp))
    return comps


def affine_nodes(config: SurfaceConfig, roots: frozenset[DivisorClass],
                 simple: frozenset[DivisorClass]) -> frozenset[DivisorClass]:
    """Extra fibre components F - theta on a cubic-pencil surface.

    Each connected negative-definite configuration of declared (-2)-curves
    lies in one fibre F = -K; the fibre is completed by F minus the
    highest root of that configuration.
    """
    if not config.cubic_pencil:
        return frozenset()
    F = -canonical(config.r)
    out = set()
    for comp in _components(sorted_classes(simple)):
        gram = [[intersect(a, b) for b in comp] for a in comp]
        if not _is_negative_definite(gram):
            continue
        basis = [list(a.vector()) for a in comp]
        best, best_h = None, None
        for R in roots:
            y = intlin.solve_rational(basis, R.vector())
            if y is None:
                continue
            h = sum(y, Fraction(0))
            if best_h is None or h > best_h:
                best, best_h = R, h
        out.add(F - best)
    return frozenset(out)


def minus_two_curves(config: SurfaceConfig, window: int = DEFAULT_WINDOW) -> frozenset[DivisorClass]:
    roots = effective_roots(config, window)
    simple = indecomposable(roots)
    return simple | affine_nodes(config, roots, simple)


def root_span_rank(config: SurfaceConfig, window: int = DEFAULT_WINDOW) -> int:
    """Rank of the effective roots in K-perp modulo K.

    Equals the plain rank of their span whenever that span is negative
    definite; a complete fibre declared by hand does not push it past 8.
    """
    roots = effective_roots(config, window)
    K = canonical(config.r)
    rows = [list(R.vector()) for R in roots] + [list(K.vector())]
    if K.is_zero():
        return intlin.rank(rows)
    return intlin.rank(rows) - 1


def passes_recognition(c: DivisorClass, curves2: Iterable[DivisorClass]) -> bool:
    """A (-1)-class is taken to be a curve iff it meets every (-2)-curve nonnegatively."""
    return all(intersect(c, N) >= 0 for N in curves2)


def minus_one_curves(config: SurfaceConfig, window: int = DEFAULT_WINDOW,
                     start_bound: int = 4, max_bound: int = 64) -> frozenset[DivisorClass]:
    result, _ = minus_one_curves_with_bound(config, window, start_bound, max_bound)
    return result


def minus_one_curves_with_bound(config: SurfaceConfig, window: int = DEFAULT_WINDOW,
                                start_bound: int = 4, max_bound: int = 64
                                ) -> tuple[frozenset[DivisorClass], int | None]:
    """(-1)-curves plus the degree bound that certified them (None when exact)."""
    r = config.r
    if r <= 8:
        curves2 = minus_two_curves(config, window)
        return frozenset(c for c in enumerate_classes(r, MINUS_ONE)
                         if passes_recognition(c, curves2)), None
    if r == 9 and config.cubic_pencil and root_span_rank(config, window) == 8:
        curves2 = minus_two_curves(config, window)

        def at(b):
            q = ClassQuery(-1, -1, b)
            return frozenset(c for c in enumerate_classes(r, q) if passes_recognition(c, curves2))
        b = start_bound
        cur = at(b)
        while 2 * b <= max_bound:
            nxt = at(2 * b)
            if nxt == cur:
                return cur, 2 * b
            b, cur = 2 * b, nxt
        raise InfiniteCaseError(f"(-1)-curve set did not stabilize up to degree {max_bound}")
    raise InfiniteCaseError(
        "the (-1)-curve set is infinite or undecided here; ask for an infinitude witness instead")
