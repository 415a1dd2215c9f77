from __future__ import annotations

import json

import pytest
from hypothesis import given, settings, strategies as st

from coxfg.config import SurfaceConfig, declared_roots, is_anticanonical, is_root
from coxfg.errors import InvalidConfigError
from coxfg.lattice import DivisorClass, exceptional


def test_declared_roots_examples():
    assert declared_roots(SurfaceConfig(4, collinear=[[1, 2, 3]])) == {DivisorClass(1, (1, 1, 1, 0))}
    assert declared_roots(SurfaceConfig(7, general_position=True)) == set()
    R = declared_roots(SurfaceConfig(2, infinitely_near=[[1, 2]]))
    assert R == {exceptional(1, 2) - exceptional(2, 2)}
    assert R == {DivisorClass(0, (-1, 1))}
    assert all(is_root(c) for c in R)
    conic = declared_roots(SurfaceConfig(6, on_conic=[[1, 2, 3, 4, 5, 6]]))
    assert conic == {DivisorClass(2, (1,) * 6)}


def test_is_anticanonical():
    assert is_anticanonical(SurfaceConfig(8, general_position=True))
    assert not is_anticanonical(SurfaceConfig(12))
    assert is_anticanonical(SurfaceConfig(12, on_cubic=True))


@settings(max_examples=100, deadline=None)
@given(st.integers(9, 16), st.booleans())
def test_anticanonical_monotone(r, flag):
    base = SurfaceConfig(r, on_cubic=flag)
    if is_anticanonical(base):
        assert is_anticanonical(SurfaceConfig(r, on_cubic=True))


@pytest.mark.parametrize("data", [
    {"r": 3, "collinear": [[1, 2, 4]]},
    {"r": 5, "collinear": [[1, 2]]},
    {"r": 6, "on_conic": [[1, 2, 3, 4, 5, 5]]},
    {"r": 5, "general_position": True, "collinear": [[1, 2, 3]]},
    {"r": 9, "general_position": True, "cubic_pencil": True},
    {"r": 8, "cubic_pencil": True},
    {"r": 3, "extra_effective_roots": ["1,1,1,0"]},
    {"r": 3, "extra_effective_roots": ["0,-1,1"]},
    {"r": 3, "colinear": [[1, 2, 3]]},
    {"general_position": True},
    {"r": -1},
    {"r": True},
    {"r": 2, "infinitely_near": [[1, 1]]},
    {"r": 2, "general_position": "yes"},
])
def test_invalid(data):
    with pytest.raises(InvalidConfigError):
        SurfaceConfig.from_dict(data)


def test_round_trip(tmp_path):
    cfg = SurfaceConfig(9, cubic_pencil=True, collinear=[[1, 2, 3]],
                        extra_effective_roots=["0,-1,1,0,0,0,0,0,0,0"])
    p = tmp_path / "c.json"
    p.write_text(json.dumps(cfg.to_dict()))
    assert SurfaceConfig.load(p) == cfg
    assert declared_roots(SurfaceConfig.load(p)) == declared_roots(cfg)


def test_load_bad_json(tmp_path):
    p = tmp_path / "c.json"
    p.write_text("{")
    with pytest.raises(InvalidConfigError):
        SurfaceConfig.load(p)
