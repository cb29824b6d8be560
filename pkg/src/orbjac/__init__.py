"""Exact orbifold Jacobian algebra products for Landau-Ginzburg orbifolds,
with checks of the point-class identity for the elliptic orbisphere mirrors."""

from __future__ import annotations

from .cases import builtin_case, ks_point_class, verify_case, verify_main_theorem, verify_trace
from .clifford import CliffordElement
from .milnor import JacobianRing
from .parser import parse_polynomial, parse_scalar
from .poly import PolyRing, Polynomial
from .qseries import TruncatedSeries, theta_series, verify_series_identity
from .scalars import CycloRational, FieldScalar, root_of_unity
from .symmetry import DiagonalGroup, GroupElement
from .twist import LGOrbifold, TwistedElement

__version__ = "0.1.0"

__all__ = [
    "CliffordElement",
    "CycloRational",
    "DiagonalGroup",
    "FieldScalar",
    "GroupElement",
    "JacobianRing",
    "LGOrbifold",
    "PolyRing",
    "Polynomial",
    "TruncatedSeries",
    "TwistedElement",
    "builtin_case",
    "ks_point_class",
    "parse_polynomial",
    "parse_scalar",
    "root_of_unity",
    "theta_series",
    "verify_case",
    "verify_main_theorem",
    "verify_series_identity",
    "verify_trace",
]
