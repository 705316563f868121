"""Closed-form Stampfli points for structured matrices."""

from .almost_normal import gen_almost_normal
from .blocks import (
    find_block_partition,
    norm_2x2,
    quadratic_coefficients,
    st_2x2,
    st_block_scalar,
    st_quadratic,
    st_tridiagonal_constant,
)
from .dispatch import st_dispatch, try_closed_form
from .polynomials import RealPolynomial, build_PA, positive_roots, resultant_matrix, resultant_res
from .three import (
    TriangularForm3,
    canonical_3x3,
    doubleton_conditions,
    multiple_eig_st_criterion,
    st_3x3_singleton,
    st_singleton_xyz0,
    st_toe_abs,
)

__all__ = [
    "RealPolynomial", "TriangularForm3", "build_PA", "canonical_3x3", "doubleton_conditions",
    "find_block_partition", "gen_almost_normal", "multiple_eig_st_criterion", "norm_2x2",
    "positive_roots", "quadratic_coefficients", "resultant_matrix", "resultant_res", "st_2x2",
    "st_3x3_singleton", "st_block_scalar", "st_dispatch", "st_quadratic", "st_singleton_xyz0",
    "st_toe_abs", "st_tridiagonal_constant", "try_closed_form",
]
