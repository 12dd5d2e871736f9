"""Exact scalars and matrices."""
from .fields import GF, QQ, FieldSpec, Mod, NotAFieldError, Poly, RatFunc, is_prime, poly_gcd
from .matrix import (
    ExactMatrix,
    charpoly,
    column_space,
    determinant,
    inverse,
    kernel_basis,
    kernel_matrix,
    left_inverse,
    left_kernel_matrix,
    poly_of_matrix,
    right_inverse,
    rref,
    solve,
    solve_matrix,
)
from .smith import SmithForm, check_smith, invariant_factors, smith_normal_form
from .factor import expand, factor_poly, factor_squarefree_charpoly

__all__ = [
    "GF", "QQ", "FieldSpec", "Mod", "NotAFieldError", "Poly", "RatFunc", "is_prime", "poly_gcd",
    "ExactMatrix", "charpoly", "column_space", "determinant", "inverse", "kernel_basis",
    "kernel_matrix", "left_inverse", "left_kernel_matrix", "poly_of_matrix", "right_inverse",
    "rref", "solve", "solve_matrix", "SmithForm", "check_smith", "invariant_factors",
    "smith_normal_form", "expand", "factor_poly", "factor_squarefree_charpoly",
]
