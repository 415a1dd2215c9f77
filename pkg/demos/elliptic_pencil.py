"""A cubic pencil with an E8 configuration of (-2)-curves, and what breaks without it.

Run:  python demos/elliptic_pencil.py
"""
from __future__ import annotations

from coxfg import SurfaceConfig, decide, effective_roots, minus_two_curves
from coxfg.curves import minus_one_curves_with_bound, root_span_rank
from coxfg.lattice import exceptional, line


def e(i):
    return exceptional(i, 9)


e8 = [e(i) - e(i + 1) for i in range(1, 8)] + [line(9) - e(1) - e(2) - e(3)]
for k in (8, 7, 4, 0):
    cfg = SurfaceConfig(9, cubic_pencil=True, extra_effective_roots=e8[:k])
    v = decide(cfg)
    print(f"{k} declared roots: rank {root_span_rank(cfg)}, {len(effective_roots(cfg))} effective roots, "
          f"verdict {v.status} via {v.theorem}")

cfg = SurfaceConfig(9, cubic_pencil=True, extra_effective_roots=e8)
print("(-2)-curves:", ", ".join(str(c) for c in sorted(minus_two_curves(cfg))))
curves, bound = minus_one_curves_with_bound(cfg)
print(f"(-1)-curves: {[str(c) for c in curves]} (stable up to degree {bound})")
for note in decide(cfg).notes:
    print("note:", note)
