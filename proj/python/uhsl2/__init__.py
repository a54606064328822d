"""Exact products in the homogeneous enveloping algebra of sl2.

Monomials are exponent tuples ``(a, b, c, d)`` standing for the divided-power
basis element ``x^a y^b z^c h^d / (a! b! c! d!)``. Elements come back as
``{(a, b, c, d): Fraction}`` dictionaries.
"""

from ._core import (
    ContractViolation,
    IntegralityViolation,
    ParseError,
    coeff,
    identities,
    mono_star_mono,
    normal_order_yx,
    normal_order_zx,
    normal_order_zy,
    normalize_expression,
    normalize_word,
    oracle_star,
    pretty,
    roundtrip_json,
    run_cli,
    shifted_elem,
    species_check,
    species_count,
    star,
    star_json,
    verify,
)

__all__ = [
    "ContractViolation",
    "IntegralityViolation",
    "ParseError",
    "coeff",
    "identities",
    "mono_star_mono",
    "normal_order_yx",
    "normal_order_zx",
    "normal_order_zy",
    "normalize_expression",
    "normalize_word",
    "oracle_star",
    "pretty",
    "roundtrip_json",
    "run_cli",
    "shifted_elem",
    "species_check",
    "species_count",
    "star",
    "star_json",
    "verify",
]
