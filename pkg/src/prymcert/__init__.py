"""Exact-arithmetic certification toolkit for signed-permutation Galois groups
and the invariants of Prym varieties of odd superelliptic trinomial families.

Everything here is exact: integer polynomial arithmetic via subresultants,
mod-p linear algebra over residues, exhaustive group enumeration under an
explicit budget, and Frobenius cycle-type sampling whose refutations are
unconditional.  Probabilistic evidence is always labeled as such and never
silently upgraded.
"""

from .intpoly import IntPoly, parse_poly
from .galoiscert import (
    TOOL_VERSION as __version__,
    certify_prym,
    certify_wdm_over_Q,
    cyclotomic_descent,
)

__all__ = [
    "IntPoly",
    "parse_poly",
    "certify_prym",
    "certify_wdm_over_Q",
    "cyclotomic_descent",
    "__version__",
]
