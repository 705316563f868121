"""Numerical range, maximal numerical range, and the zero-membership test.

Convex regions are stored through their support function sampled on a
uniform angle grid: ``support[k] = max Re(exp(-1j*angles[k]) * z)`` over the
region, together with a point of the region attaining it.  A compact convex
set contains the origin iff its support function is nonnegative everywhere,
which is how :func:`contains_zero` decides membership.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInputError, InputError
from .matcore import as_cmatrix, hermitian_eigen, jacobi_eigh

#: default number of sampled support angles
DEFAULT_SAMPLES = 720
#: relative width of the top eigenvalue cluster of A*A kept by compress_to_top
TOP_TOL = 1e-8
#: relative slack of the membership test
MEMBERSHIP_TOL = 1e-7


@dataclass
class PolygonRegion:
    angles: np.ndarray
    support: np.ndarray
    witness_points: np.ndarray

    def __len__(self):
        return len(self.angles)

    def support_at(self, theta: float) -> float:
        """Support value of the sampled polygon (the convex hull of the witnesses)."""
        return float(np.max(np.real(np.exp(-1j * theta) * self.witness_points)))

    def bounding_box(self):
        """``(re_min, re_max, im_min, im_max)`` of the witness polygon."""
        w = self.witness_points
        return (float(w.real.min()), float(w.real.max()), float(w.imag.min()), float(w.imag.max()))


@dataclass
class CompressionResult:
    B: np.ndarray
    subspace_dim: int
    top_value: float
    basis: np.ndarray


def _real_parts(A):
    H1 = 0.5 * (A + A.conj().T)
    H2 = (A - A.conj().T) / 2j
    return H1, H2


def _sweep(A, angles):
    H1, H2 = _real_parts(A)
    c = np.cos(angles)[:, None, None]
    s = np.sin(angles)[:, None, None]
    # (exp(-i t) A + exp(i t) A*) / 2 = cos(t) Re A + sin(t) Im A
    stack = c * H1[None] + s * H2[None]
    stack = 0.5 * (stack + np.swapaxes(stack.conj(), -1, -2))
    values, vectors, _ = jacobi_eigh(stack)
    x = vectors[..., :, -1]
    witness = np.einsum("ki,ij,kj->k", x.conj(), A, x)
    return values[..., -1], witness


def support_function(A, theta: float):
    """Support value of ``W(A)`` at angle ``theta`` and a point of ``W(A)`` attaining it."""
    A = as_cmatrix(A)
    value, witness = _sweep(A, np.array([float(theta)]))
    return float(value[0]), complex(witness[0])


def angle_grid(K: int) -> np.ndarray:
    return 2.0 * np.pi * np.arange(K) / K


def nr_boundary(A, K: int = DEFAULT_SAMPLES) -> PolygonRegion:
    """Support-sampled outer approximation of the closure of ``W(A)``."""
    A = as_cmatrix(A)
    if K < 16:
        raise InputError("at least 16 angles are required")
    angles = angle_grid(K)
    support, witness = _sweep(A, angles)
    return PolygonRegion(angles=angles, support=np.asarray(support, dtype=float),
                         witness_points=np.asarray(witness, dtype=complex))


def compress_to_top(A, tau_top: float = TOP_TOL) -> CompressionResult:
    """Compression of ``A`` onto the top eigenspace of ``A* A``.

    The eigenspace collects eigenvalues within ``tau_top * top_value`` of the
    largest one.  ``W(B)`` is then the maximal numerical range of ``A``.
    """
    A = as_cmatrix(A)
    if not np.any(A):
        raise DegenerateInputError("maximal numerical range needs a nonzero matrix")
    eig = hermitian_eigen(A.conj().T @ A)
    top = float(eig.values[-1])
    keep = eig.values >= top - tau_top * top
    P = eig.vectors[:, keep]
    B = P.conj().T @ A @ P
    return CompressionResult(B=B, subspace_dim=int(P.shape[1]), top_value=top, basis=P)


def max_numerical_range(A, K: int = DEFAULT_SAMPLES, tau_top: float = TOP_TOL) -> PolygonRegion:
    return nr_boundary(compress_to_top(A, tau_top).B, K)


def contains_zero(region: PolygonRegion, scale: float = 1.0, tau: float = MEMBERSHIP_TOL):
    """``(member, margin)`` where ``margin`` is the smallest sampled support value."""
    margin = float(np.min(region.support))
    return margin >= -tau * scale, margin
