"""Exact computations around line bundles on projective space.

Cech cohomology of twisting sheaves, Picard arithmetic of monomial cocycles,
divisors on the projective line, blowup chart algebra, Chern curvature of
Hermitian metrics, and desk-scale checks of maps given by sections.
"""

from . import (
    blowup,
    cech_engine,
    cover_nerve,
    divisors,
    hermitian_curvature,
    kodaira_map,
    line_bundles,
    linalg_exact,
    symbolic,
)
from .errors import KodairaKitError
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "KodairaKitError",
    "blowup",
    "cech_engine",
    "cover_nerve",
    "divisors",
    "hermitian_curvature",
    "kodaira_map",
    "line_bundles",
    "linalg_exact",
    "symbolic",
]
