"""Reference minimizer of ``f(lam) = ||A - lam I||`` and its optimality certificate.

``f`` is convex on the plane with a unique minimizer, the Stampfli point.  The
oracle seeds a Nelder-Mead simplex from a coarse grid over the bounding box
of ``W(A)`` (the minimizer lies in the closure of ``W(A)``) and refines with
restarts.  Optimality is certified independently: ``lam`` is the minimizer
iff ``0`` lies in the maximal numerical range of ``A - lam I``.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError
from .matcore import as_cmatrix, operator_norm, operator_norms
from .numrange import (
    DEFAULT_SAMPLES,
    MEMBERSHIP_TOL,
    TOP_TOL,
    _sweep,
    compress_to_top,
    contains_zero,
    nr_boundary,
)

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9
GRID = 21
MAX_ITER = 5000
RESTARTS = 2
#: certificate margins above ``-CERT_TOL * (1 + ||A||)`` count as optimal
CERT_TOL = 1e-6


class Method(str, enum.Enum):
    ORACLE = "oracle"
    TWO_BY_TWO = "two_by_two"
    BLOCK_SCALAR = "block_scalar"
    QUADRATIC = "quadratic"
    TRIDIAGONAL = "tridiagonal"
    SINGLETON3_XYZ0 = "singleton3_xyz0"
    SINGLETON3_TOE = "singleton3_toe"
    SINGLETON3_GENERAL = "singleton3_general"
    FALLBACK = "fallback"

    def __str__(self):
        return self.value


@dataclass
class StampfliResult:
    point: complex
    min_norm: float
    method: Method
    certificate_margin: float
    iterations: int = 0
    details: dict = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return self.certificate_margin >= -CERT_TOL * (1.0 + self.details.get("norm", self.min_norm))


# ---------------------------------------------------------------------------
# Nelder-Mead
# ---------------------------------------------------------------------------


def nelder_mead(func, x0, steps, xtol, max_iter=MAX_ITER):
    """Minimize ``func`` over R^d from an axis-aligned initial simplex.

    Stops when every vertex lies within ``xtol`` of the best one.  Returns
    ``(x_best, f_best, iterations, converged)``.
    """
    x0 = np.asarray(x0, dtype=float)
    d = x0.size
    pts = [x0.copy()]
    for i in range(d):
        p = x0.copy()
        p[i] += steps[i]
        pts.append(p)
    pts = np.array(pts)
    vals = np.array([func(p) for p in pts])

    it = 0
    while True:
        order = np.argsort(vals, kind="stable")
        pts, vals = pts[order], vals[order]
        diam = np.max(np.linalg.norm(pts[1:] - pts[0], axis=1))
        if diam < xtol:
            return pts[0], float(vals[0]), it, True
        if it >= max_iter:
            return pts[0], float(vals[0]), it, False
        it += 1

        centroid = pts[:-1].mean(axis=0)
        worst = pts[-1]
        xr = centroid + (centroid - worst)
        fr = func(xr)
        if fr < vals[0]:
            xe = centroid + 2.0 * (centroid - worst)
            fe = func(xe)
            if fe < fr:
                pts[-1], vals[-1] = xe, fe
            else:
                pts[-1], vals[-1] = xr, fr
            continue
        if fr < vals[-2]:
            pts[-1], vals[-1] = xr, fr
            continue
        if fr < vals[-1]:
            xc = centroid + 0.5 * (xr - centroid)
            fc = func(xc)
            if fc <= fr:
                pts[-1], vals[-1] = xc, fc
                continue
        else:
            xc = centroid + 0.5 * (worst - centroid)
            fc = func(xc)
            if fc < vals[-1]:
                pts[-1], vals[-1] = xc, fc
                continue
        pts[1:] = pts[0] + 0.5 * (pts[1:] - pts[0])
        vals[1:] = [func(p) for p in pts[1:]]


# ---------------------------------------------------------------------------
# Profile, certificate, oracle
# ---------------------------------------------------------------------------


def f_profile(A, points) -> list[float]:
    """``||A - lam I||`` for every ``lam`` in ``points``."""
    A = as_cmatrix(A)
    pts = np.asarray(list(points), dtype=complex).reshape(-1)
    if pts.size == 0:
        return []
    n = A.shape[0]
    stack = A[None, :, :] - pts[:, None, None] * np.eye(n)[None]
    return [float(v) for v in operator_norms(stack)]


def _zero_witness(B):
    """Unit ``c`` minimizing ``|<Bc, c>|`` over the sphere of C^k (k small)."""
    k = B.shape[0]
    if k == 1:
        return np.ones(1, dtype=complex)

    def g(p):
        c = p[:k] + 1j * p[k:]
        nc = np.vdot(c, c).real
        if nc == 0.0:
            return np.inf
        return abs(np.vdot(c, B @ c)) / nc

    # seeds: supporting eigenvectors at a few angles and their pairwise sums
    _, vectors = _seed_vectors(B)
    seeds = list(vectors)
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            seeds.append(vectors[i] + vectors[j])
    best = None
    for c0 in seeds:
        p0 = np.concatenate([c0.real, c0.imag])
        p, val, _, _ = nelder_mead(g, p0, np.full(2 * k, 0.2), 1e-12, max_iter=4000)
        if best is None or val < best[1]:
            best = (p, val)
    c = best[0][:k] + 1j * best[0][k:]
    return c / np.linalg.norm(c)


def _seed_vectors(B, count=8):
    from .matcore import jacobi_eigh
    angles = 2.0 * np.pi * np.arange(count) / count
    H1 = 0.5 * (B + B.conj().T)
    H2 = (B - B.conj().T) / 2j
    stack = np.cos(angles)[:, None, None] * H1 + np.sin(angles)[:, None, None] * H2
    _, vecs, _ = jacobi_eigh(stack)
    return angles, [vecs[i, :, -1] for i in range(count)]


def certificate(A, lam, K: int = DEFAULT_SAMPLES, tau_top: float = TOP_TOL, want_witness: bool = True):
    """Zero-membership margin of ``W0(A - lam I)`` and, when cheap, a witness vector.

    The margin is the minimum sampled support value of the maximal numerical
    range of ``A - lam I``; it is nonnegative (up to sampling) exactly when
    ``lam`` is the Stampfli point.  For top eigenspaces of dimension at most 3
    a unit vector ``x`` in that eigenspace minimizing ``|<(A - lam I)x, x>|``
    is returned as well, otherwise ``None``.
    """
    A = as_cmatrix(A)
    n = A.shape[0]
    M = A - complex(lam) * np.eye(n)
    if not np.any(M):
        return 0.0, (np.eye(n, dtype=complex)[:, 0] if want_witness else None)
    comp = compress_to_top(M, tau_top)
    region = nr_boundary(comp.B, K)
    _, margin = contains_zero(region)
    witness = None
    if want_witness and comp.subspace_dim <= 3:
        c = _zero_witness(comp.B)
        witness = comp.basis @ c
    return margin, witness


def certificate_margin(A, lam, K: int = DEFAULT_SAMPLES, tau_top: float = TOP_TOL) -> float:
    return certificate(A, lam, K, tau_top, want_witness=False)[0]


def _bounding_box(A):
    angles = np.array([0.0, 0.5 * np.pi, np.pi, 1.5 * np.pi])
    h, _ = _sweep(A, angles)
    return -h[2], h[0], -h[3], h[1]


def _grid_seed(A, box, grid):
    re_min, re_max, im_min, im_max = box
    xs = np.linspace(re_min, re_max, grid)
    ys = np.linspace(im_min, im_max, grid)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    lam = (X + 1j * Y).reshape(-1)
    vals = np.asarray(f_profile(A, lam))
    best = vals.min()
    # lexicographic tie-break by (Re, Im); ravel order is already (Re, Im)
    k = int(np.flatnonzero(vals == best)[0])
    return lam[k], xs[1] - xs[0], ys[1] - ys[0]


def stampfli_oracle(A, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER,
                    grid: int = GRID, restarts: int = RESTARTS, K: int = DEFAULT_SAMPLES) -> StampfliResult:
    """Minimize ``||A - lam I||`` over the complex plane.

    Raises :class:`ConvergenceError` (carrying the best point so far) when a
    simplex run exhausts ``max_iter`` before its diameter drops below
    ``tol * (1 + ||A||)``.
    """
    A = as_cmatrix(A)
    n = A.shape[0]
    norm = operator_norm(A)
    scale = 1.0 + norm
    I = np.eye(n)

    def f(p):
        return float(np.linalg.svd(A - complex(p[0], p[1]) * I, compute_uv=False)[0])

    def finish(point, iterations, method=Method.ORACLE):
        point = complex(point)
        margin = certificate_margin(A, point, K)
        return StampfliResult(point=point, min_norm=operator_norm(A - point * I), method=method,
                              certificate_margin=margin, iterations=iterations, details={"norm": norm})

    re_min, re_max, im_min, im_max = _bounding_box(A)
    extent = max(re_max - re_min, im_max - im_min)
    if n == 1 or extent <= 1e-14 * scale:
        # W(A) is a single point, hence A is scalar
        return finish(np.trace(A) / n, 0)
    pad = 0.05 * extent
    box = (re_min - pad, re_max + pad, im_min - pad, im_max + pad)
    seed, dx, dy = _grid_seed(A, box, grid)

    xtol = tol * scale
    x = np.array([seed.real, seed.imag])
    steps = [dx, dy]
    total = 0
    for attempt in range(restarts + 1):
        x, fx, it, ok = nelder_mead(f, x, steps, xtol, max_iter)
        total += it
        if not ok:
            best = finish(complex(x[0], x[1]), total)
            raise ConvergenceError(
                f"simplex did not reach diameter {xtol:.3g} in {max_iter} iterations", best=best)
        # restart from the optimum with a fresh, rotated simplex
        h = max(extent * 10.0 ** (-2 - 2 * attempt), 1e3 * xtol)
        steps = [h, -h] if attempt % 2 == 0 else [-h, h]
    result = finish(complex(x[0], x[1]), total)
    if not result.certified:
        log.warning("oracle point %s has certificate margin %.3g", result.point, result.certificate_margin)
    return result
