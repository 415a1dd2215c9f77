"""Nine and ten general points: an infinite family of (-1)-curves.

Run:  python demos/nagata_family.py
"""
from __future__ import annotations

import time

from coxfg import SurfaceConfig, decide, infinitude_witness, orbit, simple_roots
from coxfg.lattice import exceptional

for r in (9, 10):
    cfg = SurfaceConfig(r, general_position=True)
    t = time.perf_counter()
    w = infinitude_witness(cfg, 100)
    dt = time.perf_counter() - t
    print(f"r={r}: 100 distinct (-1)-classes in {dt * 1000:.1f} ms")
    for c in w[:5]:
        print("   ", c)
    print(f"    ... degree of the 100th: {w[-1].d0}")
    v = decide(cfg)
    print(f"    verdict: {v.status} via {v.theorem}")

# the orbit of e9 under the simple reflections does not close up
cls, exceeded = orbit(exceptional(9, 9), simple_roots(9), 500)
print(f"orbit of e9: {len(cls)} classes found, truncated = {exceeded}")
