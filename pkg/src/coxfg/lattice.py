"""Picard lattice of the plane blown up at r points.

A class is stored as (d0; m1..mr) and stands for

    D = d0*l - m1*e1 - ... - mr*er

so a plane curve of degree d through the points with multiplicities mi
has nonnegative coordinates.  Under this convention the exceptional
class ei has mi = -1 and the canonical class K = -3l + e1 + ... + er is
stored as (-3; -1, ..., -1).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import IntegerOverflow, InvariantError, RankMismatchError

INT64_MAX = 2**63 - 1


def checked(v: int) -> int:
    if not -INT64_MAX - 1 <= v <= INT64_MAX:
        raise IntegerOverflow(f"value {v} does not fit in 64 bits")
    return v


def _as_int(x) -> int:
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, (int, np.integer)):
        return int(x)
    raise TypeError(f"non-integer coefficient {x!r}")


@dataclass(frozen=True, order=True)
class DivisorClass:
    d0: int
    m: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "d0", checked(_as_int(self.d0)))
        object.__setattr__(self, "m", tuple(checked(_as_int(x)) for x in self.m))

    @property
    def r(self) -> int:
        return len(self.m)

    @classmethod
    def from_vector(cls, v: Sequence[int]) -> "DivisorClass":
        v = [int(x) for x in v]
        return cls(v[0], tuple(v[1:]))

    @classmethod
    def parse(cls, text: str, r: int | None = None) -> "DivisorClass":
        """Parse "d0,m1,...,mr".  With r given, exactly r+1 fields are required."""
        fields = [f.strip() for f in text.strip().split(",")]
        try:
            vals = [int(f) for f in fields]
        except ValueError as exc:
            raise ValueError(f"bad class string {text!r}") from exc
        if r is not None and len(vals) != r + 1:
            raise RankMismatchError(f"class {text!r} has {len(vals) - 1} multiplicities, expected {r}")
        return cls.from_vector(vals)

    def vector(self) -> tuple[int, ...]:
        return (self.d0,) + self.m

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.vector())

    def _same_r(self, other: "DivisorClass"):
        if len(self.m) != len(other.m):
            raise RankMismatchError(f"r={len(self.m)} vs r={len(other.m)}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._same_r(other)
        return DivisorClass(self.d0 + other.d0, tuple(a + b for a, b in zip(self.m, other.m)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._same_r(other)
        return DivisorClass(self.d0 - other.d0, tuple(a - b for a, b in zip(self.m, other.m)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.d0, tuple(-a for a in self.m))

    def __mul__(self, k: int) -> "DivisorClass":
        k = _as_int(k)
        return DivisorClass(k * self.d0, tuple(k * a for a in self.m))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.d0 == 0 and not any(self.m)


def line(r: int) -> DivisorClass:
    return DivisorClass(1, (0,) * r)


def exceptional(i: int, r: int) -> DivisorClass:
    """e_i for 1 <= i <= r (stored with m_i = -1)."""
    if not 1 <= i <= r:
        raise ValueError(f"index {i} outside 1..{r}")
    return DivisorClass(0, tuple(-1 if j == i else 0 for j in range(1, r + 1)))


def canonical(r: int) -> DivisorClass:
    return DivisorClass(-3, (-1,) * r)


def zero(r: int) -> DivisorClass:
    return DivisorClass(0, (0,) * r)


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    a._same_r(b)
    return checked(a.d0 * b.d0 - sum(x * y for x, y in zip(a.m, b.m)))


def self_int(a: DivisorClass) -> int:
    return intersect(a, a)


def k_degree(a: DivisorClass) -> int:
    """D.K = -3 d0 + sum mi."""
    return checked(-3 * a.d0 + sum(a.m))


def gram(r: int) -> np.ndarray:
    """Gram matrix of (l, e1, ..., er)."""
    return np.diag([1] + [-1] * r).astype(np.int64)


@dataclass(frozen=True)
class SurfaceModel:
    r: int
    pa: int = 0

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("r must be nonnegative")
        if self.pa != 0:
            raise ValueError("rational surfaces have arithmetic genus 0")

    @property
    def canonical(self) -> DivisorClass:
        return canonical(self.r)

    @property
    def K2(self) -> int:
        return 9 - self.r

    def check(self, D: DivisorClass) -> DivisorClass:
        if D.r != self.r:
            raise RankMismatchError(f"class has r={D.r}, model has r={self.r}")
        return D

    def line(self) -> DivisorClass:
        return line(self.r)

    def exceptional(self, i: int) -> DivisorClass:
        return exceptional(i, self.r)

    def zero(self) -> DivisorClass:
        return zero(self.r)

    def basis(self) -> list[DivisorClass]:
        return [self.line()] + [self.exceptional(i) for i in range(1, self.r + 1)]


def euler_characteristic(model: SurfaceModel, D: DivisorClass) -> int:
    """chi(O(D)) = 1 + (D^2 - D.K)/2 on a rational surface."""
    model.check(D)
    t = self_int(D) - k_degree(D)
    if t % 2:
        raise InvariantError(f"D^2 - D.K is odd for {D}")
    return checked(1 + model.pa + t // 2)


def arithmetic_genus(model: SurfaceModel, D: DivisorClass) -> int:
    model.check(D)
    t = self_int(D) + k_degree(D)
    if t % 2:
        raise InvariantError(f"D^2 + D.K is odd for {D}")
    return checked(1 + t // 2)


def h0_lower_bound(model: SurfaceModel, D: DivisorClass, eff_cone) -> int:
    """max(0, chi(D)) when K - D is certified outside the effective cone, else 0.

    `eff_cone` needs a `contains(DivisorClass) -> bool` method that is
    exact for the closed cone (see cones.ConeDesc).
    """
    model.check(D)
    if eff_cone.contains(model.canonical - D):
        return 0
    return max(0, euler_characteristic(model, D))

