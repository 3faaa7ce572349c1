"""Alexander polynomials of braid closures via the quantum gl(1|1) R-matrix.

Thin wrapper over the compiled extension. Polynomials are dicts mapping
exponent strings to decimal coefficient strings; in the t display (t = q^2)
half-integer exponents appear as exact fractions like "-1/2".
"""

from qalex._core import (
    ExactnessError,
    InvalidInputError,
    alexander,
    alexander_text,
    poly_from_dict,
    stabilization,
    torus,
    twist_coeffs,
    twist_formula,
    twisted_family,
    verify,
)

__all__ = [
    "ExactnessError",
    "InvalidInputError",
    "alexander",
    "alexander_text",
    "poly_from_dict",
    "stabilization",
    "torus",
    "twist_coeffs",
    "twist_formula",
    "twisted_family",
    "verify",
]
