from __future__ import annotations

import time

import pytest
from hypothesis import given, settings, strategies as st

from coxfg.config import SurfaceConfig
from coxfg.curves import ROOT, enumerate_classes, minus_two_curves, passes_recognition
from coxfg.errors import InvalidRootError, NotInfiniteCaseError
from coxfg.lattice import DivisorClass, canonical, exceptional, intersect, k_degree, line, self_int
from coxfg.weyl import infinitude_witness, orbit, reflect, simple_roots

coef = st.integers(-30, 30)


def e(i, r):
    return exceptional(i, r)


def cls(r):
    return st.builds(lambda d, m: DivisorClass(d, tuple(m)), coef, st.lists(coef, min_size=r, max_size=r))


ROOTS8 = sorted(enumerate_classes(8, ROOT), key=lambda c: c.vector())


@settings(max_examples=400, deadline=None)
@given(cls(8), cls(8), st.sampled_from(ROOTS8))
def test_reflection_isometry_involution(x, y, R):
    assert intersect(reflect(x, R), reflect(y, R)) == intersect(x, y)
    assert reflect(reflect(x, R), R) == x
    assert reflect(canonical(8), R) == canonical(8)


def test_reflect_examples():
    assert reflect(e(1, 2), e(1, 2) - e(2, 2)) == e(2, 2)
    R = line(9) - e(1, 9) - e(2, 9) - e(3, 9)
    assert reflect(e(9, 9), R) == e(9, 9)
    with pytest.raises(InvalidRootError):
        reflect(e(1, 2), line(2))


def test_simple_roots():
    S = simple_roots(9)
    assert len(S) == 9
    assert all(self_int(R) == -2 and k_degree(R) == 0 for R in S)


def test_orbit_examples():
    got, exceeded = orbit(e(1, 2), [e(1, 2) - e(2, 2)], 10)
    assert set(got) == {e(1, 2), e(2, 2)} and not exceeded
    got, exceeded = orbit(e(9, 9), simple_roots(9), 100)
    assert len(got) == 100 and exceeded
    got, exceeded = orbit(canonical(5), simple_roots(5), 10)
    assert got == [canonical(5)] and not exceeded
    with pytest.raises(ValueError):
        orbit(e(1, 2), [], 0)


def test_orbit_exact_limit_not_exceeded():
    # the orbit of e1 under W(E6) is the 27 lines: a limit of exactly 27 is not exceeded
    got, exceeded = orbit(e(1, 6), simple_roots(6), 27)
    assert len(got) == 27 and not exceeded
    got, exceeded = orbit(e(1, 6), simple_roots(6), 26)
    assert len(got) == 26 and exceeded


@pytest.mark.parametrize("r", [9, 10, 12, 16])
def test_general_witness(r):
    cfg = SurfaceConfig(r, general_position=True)
    t = time.perf_counter()
    w = infinitude_witness(cfg, 100)
    assert time.perf_counter() - t < 1.0
    assert len(set(w)) == 100
    assert w[0] == e(r, r)
    assert all(self_int(c) == -1 and k_degree(c) == -1 for c in w)
    assert all(a.d0 < b.d0 for a, b in zip(w, w[1:]))


def test_witness_examples():
    w = infinitude_witness(SurfaceConfig(9, general_position=True), 3)
    assert w[0] == e(9, 9) and w[0].d0 < w[1].d0 < w[2].d0
    assert infinitude_witness(SurfaceConfig(10, general_position=True), 0) == []
    with pytest.raises(NotInfiniteCaseError):
        infinitude_witness(SurfaceConfig(6, general_position=True), 5)
    with pytest.raises(NotInfiniteCaseError):
        infinitude_witness(SurfaceConfig(12), 5)


@pytest.mark.parametrize("cfg", [
    SurfaceConfig(9, cubic_pencil=True),
    SurfaceConfig(9, cubic_pencil=True, collinear=[[1, 2, 3]], infinitely_near=[[4, 5]]),
    SurfaceConfig(9, collinear=[[1, 2, 3]]),
    SurfaceConfig(11, on_cubic=True, on_conic=[[1, 2, 3, 4, 5, 6]]),
])
def test_special_witness_passes_recognition(cfg):
    w = infinitude_witness(cfg, 40)
    curves2 = minus_two_curves(cfg)
    assert len(set(w)) == 40
    for c in w:
        assert self_int(c) == -1 and k_degree(c) == -1
        assert passes_recognition(c, curves2)
