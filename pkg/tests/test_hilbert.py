from __future__ import annotations

import numpy as np
from hypothesis import given, settings, strategies as st

from coxfg.hilbert import hilbert_basis_of_rays
from coxfg.polyhedral import h_to_v
from oracles import brute_hilbert_basis, rank_fraction


def hb_set(rays):
    return {tuple(int(x) for x in v) for v in hilbert_basis_of_rays(np.array(rays, dtype=np.int64))}


def oracle(rays):
    normals = h_to_v(np.array(rays, dtype=np.int64)).rays.tolist()
    box = int(np.abs(np.array(rays)).sum(axis=0).max())
    return brute_hilbert_basis(rays, normals, box)


def test_non_unimodular_plane_cone():
    # l + e1 and l - e1 span an index-2 sublattice; l is the missing generator
    assert hb_set([[1, -1], [1, 1]]) == {(1, -1), (1, 0), (1, 1)}
    assert hb_set([[1, 0], [1, 3]]) == {(1, 0), (1, 1), (1, 2), (1, 3)}


def test_classic_3d():
    rays = [[1, 0, 0], [0, 1, 0], [1, 1, 2]]
    assert hb_set(rays) == {(1, 0, 0), (0, 1, 0), (1, 1, 2), (1, 1, 1)}
    assert hb_set(rays) == oracle(rays)


def _primitive_extreme(rays):
    rays = np.array(rays, dtype=np.int64)
    facets = h_to_v(rays)
    # full-dimensional and pointed: no lineality on either side
    if len(facets.lineality) or rank_fraction(facets.rays.tolist()) < rays.shape[1]:
        return None
    dual = h_to_v(facets.rays)
    return dual.rays.tolist()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=5))
def test_rank3_matches_oracle(gens):
    if rank_fraction(gens) < 3:
        return
    rays = _primitive_extreme(gens)
    if rays is None:
        return
    assert hb_set(rays) == oracle(rays)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=2, max_size=2), min_size=2, max_size=4))
def test_rank2_matches_oracle(gens):
    if rank_fraction(gens) < 2:
        return
    rays = _primitive_extreme(gens)
    if rays is None:
        return
    assert hb_set(rays) == oracle(rays)


def test_lower_rank_cone_in_higher_space():
    # a 2-dimensional cone inside Z^3
    rays = [[1, 1, 0], [1, -1, 2]]
    got = hb_set(rays)
    assert (1, 0, 1) in got and len(got) == 3
