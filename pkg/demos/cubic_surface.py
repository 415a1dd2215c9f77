"""The plane blown up at six general points: 27 lines, cones and the verdict.

Run:  python demos/cubic_surface.py
"""
from __future__ import annotations

from coxfg import (SurfaceConfig, SurfaceModel, canonical, check_extremal, decide, effective_cone,
                   euler_characteristic, hilbert_basis, nef_cone)

cfg = SurfaceConfig(6, general_position=True)
model = SurfaceModel(6)
K = canonical(6)
print(f"K = {K}   K^2 = {model.K2}   chi(-K) = {euler_characteristic(model, -K)}")

eff = effective_cone(cfg)
print(f"effective cone: {len(eff.generators)} generators, {len(eff.extremal_rays)} extremal")
by_degree: dict[int, int] = {}
for c in eff.generators:
    by_degree[c.d0] = by_degree.get(c.d0, 0) + 1
print("  lines by plane degree:", dict(sorted(by_degree.items())))

nef = nef_cone(cfg)
hb = hilbert_basis(nef)
print(f"nef cone: {len(nef.extremal_rays)} extremal rays, Hilbert basis of {len(hb)} classes")
print("extremality:", check_extremal(cfg).status)

v = decide(cfg)
print(f"verdict: {v.status} via {v.theorem}")
