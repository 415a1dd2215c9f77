"""Effective and nef cones, Hilbert bases and the extremality check.

Duality is taken with respect to the intersection form: the dual of a
cone spanned by classes g is {y : y.g >= 0 for all g}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from . import intlin
from .config import SurfaceConfig
from .curves import ROOT, enumerate_classes, minus_one_curves, minus_two_curves, sorted_classes
from .errors import CapacityError, InfiniteCaseError, NotFinitelyGeneratedError
from .hilbert import MAX_RANK, HilbertSolver
from .lattice import DivisorClass, canonical, exceptional, gram, intersect, line, self_int
from .polyhedral import h_to_v

KINDS = ("effective", "nef", "other")


def _mat(classes: Iterable[DivisorClass], r: int) -> np.ndarray:
    rows = [c.vector() for c in classes]
    return np.array(rows, dtype=np.int64).reshape(len(rows), r + 1)


def _classes(M: np.ndarray) -> tuple[DivisorClass, ...]:
    return tuple(DivisorClass.from_vector(v) for v in M)


def primitive_class(c: DivisorClass) -> DivisorClass:
    return DivisorClass.from_vector(intlin.primitive(c.vector()))


@dataclass
class ConeDesc:
    """Cone spanned by `generators` in Pic of the r-point blow-up.

    `extremal_rays` are primitive.  When the cone contains a line, the
    rays of its pointed part are followed by both signs of a lineality
    basis.  `degenerate` marks the dual of the zero cone.
    """
    r: int
    generators: tuple[DivisorClass, ...]
    kind: str = "other"
    extremal_rays: tuple[DivisorClass, ...] = ()
    hilbert_basis: tuple[DivisorClass, ...] | None = None
    degenerate: bool = False
    _dual: tuple | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        for g in self.generators:
            if g.r != self.r:
                raise ValueError(f"generator {g} has r={g.r}, cone has r={self.r}")

    def dual_description(self) -> tuple[np.ndarray, np.ndarray]:
        """(rays, lineality) of the dual cone, as coordinate vectors of classes."""
        if self._dual is None:
            J = gram(self.r)
            G = _mat(self.generators, self.r)
            if len(G) == 0:
                eye = np.eye(self.r + 1, dtype=np.int64)
                self._dual = (np.zeros((0, self.r + 1), np.int64), eye)
            else:
                res = h_to_v(G @ J)
                self._dual = (res.rays, res.lineality)
        return self._dual

    def contains(self, x: DivisorClass) -> bool:
        """Exact membership in the closed cone."""
        if x.r != self.r:
            raise ValueError("rank mismatch")
        D, L = self.dual_description()
        J = gram(self.r)
        v = np.array(x.vector(), dtype=np.int64)
        if len(L) and (L @ J @ v != 0).any():
            return False
        return bool((D @ J @ v >= 0).all())

    def rank(self) -> int:
        return intlin.rank(_mat(self.generators, self.r)) if self.generators else 0

    def is_pointed(self) -> bool:
        rays = set(self.extremal_rays)
        return not any(-g in rays for g in rays)


def _extremal(G: np.ndarray, dual_rays: np.ndarray, dual_lin: np.ndarray, J: np.ndarray,
              lin_dim: int = 0) -> np.ndarray:
    """Primitive generators spanning extreme rays (modulo the lineality).

    g is extreme iff the dual rays tight at g, together with the dual
    lineality, have rank n - 1 - lin_dim.
    """
    n = G.shape[1]
    if len(G) == 0:
        return G
    G = np.unique(intlin.primitive_rows(G[np.any(G != 0, axis=1)]), axis=0)
    vals = G @ J @ dual_rays.T if len(dual_rays) else np.zeros((len(G), 0), np.int64)
    out = []
    for i, g in enumerate(G):
        M = np.vstack([dual_rays[vals[i] == 0], dual_lin])
        rk = intlin.rank(M) if len(M) else 0
        if rk == n - 1 - lin_dim:
            out.append(g)
    out = np.array(out, dtype=np.int64).reshape(len(out), n)
    return out[np.lexsort(out.T[::-1])] if len(out) else out


def make_cone(r: int, generators: Iterable[DivisorClass], kind: str = "other") -> ConeDesc:
    gens = tuple(sorted_classes(set(generators)))
    cone = ConeDesc(r, gens, kind)
    if not gens or all(g.is_zero() for g in gens):
        return cone
    D, L = cone.dual_description()
    J = gram(r)
    n = r + 1
    M = np.vstack([D, L])
    lin = intlin.kernel(intlin.as_rows(M @ J), n) if len(M) else \
        [[int(i == j) for j in range(n)] for i in range(n)]
    G = _mat(gens, r)
    if lin:
        # generators outside the lineality, reduced to a minimal set modulo it
        P = np.array([g for g in G if intlin.rank(lin + [list(g)]) > len(lin)],
                     dtype=np.int64).reshape(-1, n)
        rays = _classes(_extremal(P, D, L, J, len(lin))) if len(P) else ()
        both = []
        for v in lin:
            c = DivisorClass.from_vector(intlin.primitive(v))
            both += [c, -c]
        cone.extremal_rays = tuple(rays) + tuple(both)
    else:
        cone.extremal_rays = _classes(_extremal(G, D, L, J))
    return cone


# operations ----------------------------------------------------------------

def effective_generators(config: SurfaceConfig) -> tuple[DivisorClass, ...]:
    r = config.r
    try:
        gens = set(minus_one_curves(config)) | set(minus_two_curves(config))
    except InfiniteCaseError as exc:
        from .weyl import infinitude_witness
        raise NotFinitelyGeneratedError(
            str(exc), witness=lambda n=25: infinitude_witness(config, n)) from exc
    L = line(r)
    if r == 0:
        gens.add(L)
    elif r <= 2:
        gens |= {L, L - exceptional(1, r)}
    return tuple(sorted_classes(gens))


@lru_cache(maxsize=64)
def effective_cone(config: SurfaceConfig) -> ConeDesc:
    return make_cone(config.r, effective_generators(config), "effective")


def nef_dual(cone: ConeDesc) -> ConeDesc:
    """Generators of {y : y.g >= 0 for all generators g}."""
    r = cone.r
    D, L = cone.dual_description()
    lin = []
    for v in L:
        c = DivisorClass.from_vector(intlin.primitive(v))
        lin += [c, -c]
    rays = _classes(D)
    kind = "nef" if cone.kind == "effective" else "other"
    out = ConeDesc(r, tuple(sorted_classes(set(rays) | set(lin))), kind,
                   extremal_rays=tuple(rays) + tuple(lin),
                   degenerate=not cone.generators or all(g.is_zero() for g in cone.generators))
    if not lin and cone.extremal_rays and cone.is_pointed():
        # the dual of the dual is the original cone; its rays are our facet normals
        out._dual = (_mat(cone.extremal_rays, r), np.zeros((0, r + 1), np.int64))
    return out


def symmetry_matrices(r: int) -> list[np.ndarray]:
    """Reflections in all roots (r <= 8) as integer matrices on coordinate vectors."""
    if r > 8:
        return []
    J = gram(r)
    out = []
    for R in sorted_classes(c for c in enumerate_classes(r, ROOT) if c > -c):
        v = np.array(R.vector(), dtype=np.int64)
        out.append(np.eye(r + 1, dtype=np.int64) + np.outer(v, J @ v))
    return out


def hilbert_basis(cone: ConeDesc) -> tuple[DivisorClass, ...]:
    """Minimal generators of the monoid cone ∩ Pic (pointed cones only).

    Raises CapacityError above rank MAX_RANK or when a non-Gorenstein face
    needs more simplices than the triangulation budget allows.
    """
    if cone.hilbert_basis is not None:
        return cone.hilbert_basis
    r = cone.r
    if not cone.generators or all(g.is_zero() for g in cone.generators):
        cone.hilbert_basis = ()
        return ()
    k = cone.rank()
    if k > MAX_RANK:
        raise CapacityError(f"cone rank {k} exceeds the guard {MAX_RANK}")
    if not cone.is_pointed():
        raise ValueError("Hilbert basis requested for a cone containing a line")
    rays = _mat(cone.extremal_rays, r)
    D, L = cone.dual_description()
    J = gram(r)
    facets = D @ J if len(D) else None
    if len(L):
        facets = None
    solver = HilbertSolver(rays, facets, symmetry_matrices(r))
    cone.hilbert_basis = _classes(solver.solve())
    return cone.hilbert_basis


@lru_cache(maxsize=64)
def nef_cone(config: SurfaceConfig) -> ConeDesc:
    return nef_dual(effective_cone(config))


# extremality ---------------------------------------------------------------

@dataclass(frozen=True)
class PredicateOutcome:
    cls: DivisorClass
    passed: bool
    branch: str     # anticanonical_degree | big | fiber | none


@dataclass(frozen=True)
class ExtremalityReport:
    status: str     # extremal | not_extremal | unknown
    outcomes: tuple[PredicateOutcome, ...]

    def explanation(self) -> list[str]:
        return [f"{o.cls}: {'pass' if o.passed else 'unknown'} ({o.branch})" for o in self.outcomes]


def semiample_predicate(n: DivisorClass) -> PredicateOutcome:
    """Sufficient conditions for a nef class to lie in [Char : Nef]."""
    r = n.r
    mK = -canonical(r)
    if intersect(n, mK) > 0:
        return PredicateOutcome(n, True, "anticanonical_degree")
    if self_int(n) > 0:
        return PredicateOutcome(n, True, "big")
    if 9 - r == 0 and _nonneg_multiple(n, mK):
        return PredicateOutcome(n, True, "fiber")
    return PredicateOutcome(n, False, "none")


def _nonneg_multiple(n: DivisorClass, v: DivisorClass) -> bool:
    if n.is_zero():
        return True
    a, b = n.vector(), v.vector()
    # n = t v with t >= 0
    i = next(i for i, x in enumerate(b) if x != 0)
    if a[i] * b[i] < 0 or a[i] % b[i]:
        return False
    t = a[i] // b[i]
    return all(x == t * y for x, y in zip(a, b))


def classify_classes(classes: Iterable[DivisorClass]) -> ExtremalityReport:
    outs = tuple(semiample_predicate(n) for n in classes)
    status = "extremal" if all(o.passed for o in outs) else "unknown"
    return ExtremalityReport(status, outs)


def check_extremal(config: SurfaceConfig) -> ExtremalityReport:
    return classify_classes(hilbert_basis(nef_cone(config)))
