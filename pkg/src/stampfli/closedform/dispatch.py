"""Route a matrix to the cheapest applicable closed form, falling back to the oracle."""

from __future__ import annotations

import logging

import numpy as np

from ..matcore import as_cmatrix, operator_norm
from ..oracle import CERT_TOL, Method, StampfliResult, certificate_margin, stampfli_oracle
from .blocks import STRUCT_TOL, find_block_partition, st_2x2, st_quadratic, st_tridiagonal_constant
from .three import canonical_3x3, st_3x3_singleton

log = logging.getLogger(__name__)


def _closed(A, point, method, norm, **details):
    point = complex(point)
    details["norm"] = norm
    n = A.shape[0]
    return StampfliResult(point=point, min_norm=operator_norm(A - point * np.eye(n)), method=method,
                          certificate_margin=certificate_margin(A, point), details=details)


def try_closed_form(A, tol: float = 1e-9, norm: float | None = None):
    """First applicable closed form as a result, or ``None``; no certificate fallback."""
    A = as_cmatrix(A)
    norm = operator_norm(A) if norm is None else norm
    n = A.shape[0]
    if n == 2:
        return _closed(A, st_2x2(A), Method.TWO_BY_TWO, norm)
    st = st_quadratic(A, STRUCT_TOL)
    if st is not None:
        return _closed(A, st, Method.QUADRATIC, norm)
    if n == 3:
        form = canonical_3x3(A)
        if form is not None and form.kind == "singleton":
            return st_3x3_singleton(A, tol, form=form)
    st = st_tridiagonal_constant(A, STRUCT_TOL)
    if st is not None:
        return _closed(A, st, Method.TRIDIAGONAL, norm)
    found = find_block_partition(A, STRUCT_TOL)
    if found is not None:
        (n1, n2), st = found
        return _closed(A, st, Method.BLOCK_SCALAR, norm, partition=[n1, n2])
    return None


def st_dispatch(A, tol: float = 1e-9) -> StampfliResult:
    """Stampfli point by closed form when one applies, else by the oracle.

    Every closed-form answer is checked against the optimality certificate;
    one that fails it is replaced by the oracle result with method
    ``fallback``.
    """
    A = as_cmatrix(A)
    norm = operator_norm(A)
    res = try_closed_form(A, tol, norm)
    if res is None:
        return stampfli_oracle(A, tol)
    if res.method is not Method.FALLBACK and res.certificate_margin < -CERT_TOL * (1.0 + norm):
        log.warning("%s answer %s failed the certificate (margin %.3g); using the oracle",
                    res.method, res.point, res.certificate_margin)
        fb = stampfli_oracle(A, tol)
        fb.method = Method.FALLBACK
        fb.details.update(rejected_method=str(res.method), rejected_point=res.point)
        return fb
    return res
