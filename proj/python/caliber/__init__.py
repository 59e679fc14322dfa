"""Exact and numeric comass machinery for 4-forms on R^8.

Thin wrapper over the compiled core. Rational values cross the boundary as
"p/q" strings so nothing is lost to floating point on the exact paths.
"""

from _caliber import (
    catalog_json,
    cayley,
    comass_exact,
    comass_numeric,
    decompose_convex,
    from_span_json,
    normal_form,
    psi_inv,
    random_form_json,
    stabilizer_dim,
    wirtinger_ratio,
)

__all__ = [
    "catalog_json",
    "cayley",
    "comass_exact",
    "comass_numeric",
    "decompose_convex",
    "from_span_json",
    "normal_form",
    "psi_inv",
    "random_form_json",
    "stabilizer_dim",
    "wirtinger_ratio",
]
