"""Stampfli points of complex matrices.

The Stampfli point ``St(A)`` is the unique ``lam`` minimizing ``||A - lam I||``
in the operator 2-norm.  This package computes it with a certified
derivative-free optimizer and with closed forms for structured matrices,
and tests Roberts orthogonality of ``A`` to the identity.
"""

from .closedform import (
    build_PA,
    canonical_3x3,
    gen_almost_normal,
    multiple_eig_st_criterion,
    norm_2x2,
    positive_roots,
    resultant_res,
    st_2x2,
    st_3x3_singleton,
    st_block_scalar,
    st_dispatch,
    st_quadratic,
    st_toe_abs,
    st_tridiagonal_constant,
)
from .errors import ConvergenceError, DegenerateInputError, InputError, StampfliError
from .matcore import eigenvalues, operator_norm, schur_triangularize
from .numrange import compress_to_top, contains_zero, max_numerical_range, nr_boundary, support_function
from .oracle import Method, StampfliResult, certificate, certificate_margin, f_profile, stampfli_oracle
from .roberts import Classification, RobertsReport, classify_circular3, classify_quadratic, roberts_numeric

__version__ = "0.1.0"

__all__ = [
    "Classification", "ConvergenceError", "DegenerateInputError", "InputError", "Method",
    "RobertsReport", "StampfliError", "StampfliResult", "build_PA", "canonical_3x3", "certificate",
    "certificate_margin", "classify_circular3", "classify_quadratic", "compress_to_top", "contains_zero",
    "eigenvalues", "f_profile", "gen_almost_normal", "max_numerical_range", "multiple_eig_st_criterion",
    "norm_2x2", "nr_boundary", "operator_norm", "positive_roots", "resultant_res", "roberts_numeric",
    "schur_triangularize", "st_2x2", "st_3x3_singleton", "st_block_scalar", "st_dispatch",
    "st_quadratic", "st_toe_abs", "st_tridiagonal_constant", "stampfli_oracle", "support_function",
]
