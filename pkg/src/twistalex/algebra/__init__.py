from .cyclotomic import (CyclotomicNumber, as_cyclotomic, cyclotomic_polynomial, delta,
                         euler_phi, root_of_unity_order)
from .laurent import (LaurentPolynomial, RationalFunction, eq_up_to_unit, eval_numeric,
                      poly_gcd, ratfn_normalize, unit_canonical)
from .matrix import (PolyMatrix, block_diagonal, characteristic_polynomial, determinant,
                     mat_add, mat_det, mat_embed, mat_from_rows, mat_identity, mat_inverse,
                     mat_is_identity, mat_mul, mat_order, mat_pow, mat_scale, mat_sub)

__all__ = [
    "CyclotomicNumber", "as_cyclotomic", "cyclotomic_polynomial", "delta", "euler_phi",
    "root_of_unity_order", "LaurentPolynomial", "RationalFunction", "eq_up_to_unit",
    "eval_numeric", "poly_gcd", "ratfn_normalize", "unit_canonical", "PolyMatrix",
    "block_diagonal", "characteristic_polynomial", "determinant", "mat_add", "mat_det",
    "mat_embed", "mat_from_rows", "mat_identity", "mat_inverse", "mat_is_identity",
    "mat_mul", "mat_order", "mat_pow", "mat_scale", "mat_sub",
]
