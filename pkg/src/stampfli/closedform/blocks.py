"""Closed forms for matrices built from scalar diagonal blocks.

Each ``st_*`` function here either returns the Stampfli point or ``None``
when the structure it needs is absent.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import InputError
from ..matcore import as_cmatrix, operator_norm, schur_triangularize

STRUCT_TOL = 1e-9


def _require_n(A, n):
    if A.shape[0] != n:
        raise InputError(f"expected a {n}x{n} matrix, got {A.shape[0]}x{A.shape[0]}")


def st_2x2(A) -> complex:
    """Half the trace: the Stampfli point of any 2x2 matrix."""
    A = as_cmatrix(A)
    _require_n(A, 2)
    return complex((A[0, 0] + A[1, 1]) / 2)


def _triangle_2x2(A):
    if A[1, 0] == 0:
        return A[0, 0], A[1, 1], abs(A[0, 1])
    if A[0, 1] == 0:
        return A[1, 1], A[0, 0], abs(A[1, 0])
    _, T = schur_triangularize(A)
    return T[0, 0], T[1, 1], abs(T[0, 1])


def norm_2x2(A, lam) -> float:
    """``||A - lam I||`` for 2x2 ``A`` from the eigenvalues and the Schur off-diagonal."""
    A = as_cmatrix(A)
    _require_n(A, 2)
    l1, l2, c = _triangle_2x2(A)
    d1 = abs(l1 - lam) ** 2
    d2 = abs(l2 - lam) ** 2
    c2 = c * c
    root = math.sqrt((d1 - d2) ** 2 + c2 * c2 + 2 * c2 * (d1 + d2))
    return math.sqrt(0.5 * (d1 + d2 + c2 + root))


def _commutator_norm(M):
    return np.linalg.norm(M @ M.conj().T - M.conj().T @ M)


def st_block_scalar(A, n1: int, n2: int, tol: float = STRUCT_TOL):
    """``(a1 + a2) / 2`` for ``[[a1 I, X], [Y*, a2 I]]`` with ``XY*`` and ``Y*X`` normal.

    Normality is not needed when ``a1 == a2``.  Returns ``None`` when the
    block structure is absent.
    """
    A = as_cmatrix(A)
    n = A.shape[0]
    if n1 < 1 or n2 < 1 or n1 + n2 != n:
        raise InputError(f"partition {n1}+{n2} does not match n={n}")
    size = operator_norm(A)
    A11, A22 = A[:n1, :n1], A[n1:, n1:]
    a1 = np.trace(A11) / n1
    a2 = np.trace(A22) / n2
    if (np.linalg.norm(A11 - a1 * np.eye(n1)) > tol * size
            or np.linalg.norm(A22 - a2 * np.eye(n2)) > tol * size):
        return None
    if abs(a1 - a2) <= tol * size:
        return complex((a1 + a2) / 2)
    X, Ys = A[:n1, n1:], A[n1:, :n1]
    off = math.hypot(np.linalg.norm(X), np.linalg.norm(Ys))
    bound = tol * off ** 4
    if _commutator_norm(X @ Ys) > bound or _commutator_norm(Ys @ X) > bound:
        return None
    return complex((a1 + a2) / 2)


def find_block_partition(A, tol: float = STRUCT_TOL):
    """First contiguous split ``(n1, n2)`` accepted by :func:`st_block_scalar`."""
    A = as_cmatrix(A)
    n = A.shape[0]
    for n1 in range(1, n):
        st = st_block_scalar(A, n1, n - n1, tol)
        if st is not None:
            return (n1, n - n1), st
    return None


def quadratic_coefficients(A):
    """Least-squares ``(p, q, residual)`` for ``A**2 + p A + q I ~ 0``.

    Solved on the trace-free part ``A0 = A - cI``, for which ``vec(A0)`` and
    ``vec(I)`` are orthogonal, so the normal equations decouple.  The residual
    is the Frobenius norm of ``A**2 + pA + qI``.
    """
    A = as_cmatrix(A)
    n = A.shape[0]
    c = np.trace(A) / n
    A0 = A - c * np.eye(n)
    A0sq = A0 @ A0
    nn = np.vdot(A0, A0).real
    if nn == 0.0:
        # scalar matrix: (A - c)**2 = 0
        return complex(-2 * c), complex(c * c), 0.0
    p0 = -np.vdot(A0, A0sq) / nn
    q0 = -np.trace(A0sq) / n
    residual = float(np.linalg.norm(A0sq + p0 * A0 + q0 * np.eye(n)))
    p = p0 - 2 * c
    q = q0 - c * p0 + c * c
    return complex(p), complex(q), residual


def st_quadratic(A, tol: float = STRUCT_TOL):
    """``-p/2`` when ``A**2 + pA + qI = 0`` within ``tol``, else ``None``."""
    A = as_cmatrix(A)
    n = A.shape[0]
    c = np.trace(A) / n
    size = np.linalg.norm(A - c * np.eye(n), 2)
    p, _, residual = quadratic_coefficients(A)
    if residual > tol * size * size:
        return None
    return complex(-p / 2)


def st_tridiagonal_constant(A, tol: float = STRUCT_TOL):
    """Common diagonal value when ``a_ij = 0`` for every even ``i - j != 0``."""
    A = as_cmatrix(A)
    n = A.shape[0]
    size = operator_norm(A)
    i, j = np.indices((n, n))
    even = ((i - j) % 2 == 0) & (i != j)
    if np.any(np.abs(A[even]) > tol * size):
        return None
    d = np.diag(A)
    a = d.mean()
    if np.max(np.abs(d - a)) > tol * size:
        return None
    return complex(a)
