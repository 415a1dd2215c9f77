"""Exact toolkit for the Picard lattice of blow-ups of the plane.

Negative curves, effective and nef cones, Hilbert bases and verdicts on
finite generation of the Cox ring.
"""
from __future__ import annotations

from .config import SurfaceConfig, declared_roots, is_anticanonical
from .cones import (ConeDesc, check_extremal, effective_cone, hilbert_basis, make_cone, nef_cone,
                    nef_dual)
from .curves import (MINUS_ONE, ROOT, ClassQuery, effective_roots, enumerate_classes,
                     minus_one_curves, minus_two_curves)
from .errors import (CapacityError, CoxError, InvalidConfigError, InvalidRootError,
                     InvariantError, NotFinitelyGeneratedError, NotInfiniteCaseError,
                     RankMismatchError, UnboundedSearchError, WindowExceededError)
from .lattice import (DivisorClass, SurfaceModel, arithmetic_genus, canonical,
                      euler_characteristic, exceptional, h0_lower_bound, intersect, line)
from .verdict import Verdict, classify, cross_check, decide
from .weyl import infinitude_witness, orbit, reflect, simple_roots

__version__ = "0.1.0"
