"""Integral right triangle / theta-integral rhombus pairs with a common area
and a common perimeter, generated from rational points on an elliptic curve.

All numbers cross the boundary exactly: rationals as ``fractions.Fraction``,
integers as ``int``. Curve points are ``(x, y)`` tuples, or ``None`` for the
point at infinity.
"""

from ._core import (
    DomainError,
    PairCertificate,
    ParseError,
    SingularMapError,
    add,
    biquadratic_residual,
    build_certificate,
    contains,
    curve_coefficients,
    discriminant,
    harvest,
    negate,
    parse_certificates,
    point,
    sweep,
    to_csv,
    to_json,
    uv_to_xy,
    verify,
    xy_to_uv,
)

__all__ = [
    "DomainError",
    "PairCertificate",
    "ParseError",
    "SingularMapError",
    "add",
    "biquadratic_residual",
    "build_certificate",
    "contains",
    "curve_coefficients",
    "discriminant",
    "harvest",
    "negate",
    "parse_certificates",
    "point",
    "sweep",
    "to_csv",
    "to_json",
    "uv_to_xy",
    "verify",
    "xy_to_uv",
]
