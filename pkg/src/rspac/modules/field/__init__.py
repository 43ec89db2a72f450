"""
GF(2^8) arithmetic and polynomial algebra used by the Reed-Solomon codec.
"""

from rspac.modules.field.gf256 import (
    ALPHA,
    EXP_ARRAY,
    EXP_TABLE,
    GROUP_ORDER,
    LOG_ARRAY,
    LOG_TABLE,
    PRIMITIVE_POLY,
    FieldError,
    alpha_pow,
    gf_add,
    gf_div,
    gf_inv,
    gf_mul,
    gf_mul_reference,
    gf_pow,
)
from rspac.modules.field.poly import (
    GfPoly,
    poly_add,
    poly_divmod,
    poly_eval,
    poly_formal_derivative,
    poly_mod_xn,
    poly_mul,
    poly_scale,
)

__all__ = [
    "ALPHA",
    "EXP_ARRAY",
    "EXP_TABLE",
    "GROUP_ORDER",
    "LOG_ARRAY",
    "LOG_TABLE",
    "PRIMITIVE_POLY",
    "FieldError",
    "alpha_pow",
    "gf_add",
    "gf_div",
    "gf_inv",
    "gf_mul",
    "gf_mul_reference",
    "gf_pow",
    "GfPoly",
    "poly_add",
    "poly_divmod",
    "poly_eval",
    "poly_formal_derivative",
    "poly_mod_xn",
    "poly_mul",
    "poly_scale",
]
