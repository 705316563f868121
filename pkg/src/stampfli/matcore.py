"""Dense complex matrix kernel for small n.

Everything here works on plain ``numpy`` complex arrays; :func:`as_cmatrix`
is the single validation gate.  The Hermitian eigensolver is a cyclic Jacobi
method that also runs on stacks of matrices, which is what the numerical
range sweeps use.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, InputError

EPS = np.finfo(float).eps

#: relative tolerance for orthonormality / residual checks of eigenpairs
EIGEN_TOL = 1e-10
#: relative Hermitian-ness tolerance accepted by :func:`hermitian_eigen`
HERMITIAN_TOL = 1e-12
#: single-linkage threshold factor, ``tau = CLUSTER_TOL * (1 + scale)``
CLUSTER_TOL = 1e-7

_JACOBI_OFF_TOL = 1e-14
_JACOBI_MAX_SWEEPS = 64
# multiple-root acceptance in the n <= 3 characteristic polynomial path
_ROOT_SNAP = 64.0


def as_cmatrix(A) -> np.ndarray:
    """Validate ``A`` and return it as a square complex ``ndarray`` (a copy)."""
    try:
        M = np.array(A, dtype=complex)
    except (TypeError, ValueError) as exc:
        raise InputError(f"cannot convert input to a complex matrix: {exc}") from None
    if M.ndim == 0:
        M = M.reshape(1, 1)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise InputError(f"expected a non-empty square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise InputError("matrix has non-finite entries")
    return M


def adjoint(A: np.ndarray) -> np.ndarray:
    return np.swapaxes(np.conj(A), -1, -2)


def operator_norm(A) -> float:
    """Spectral norm: the largest singular value of ``A``."""
    A = as_cmatrix(A)
    return float(np.linalg.svd(A, compute_uv=False)[0])


def operator_norms(stack: np.ndarray) -> np.ndarray:
    """Spectral norms of a stack of matrices with shape ``(..., n, n)``."""
    return np.linalg.svd(stack, compute_uv=False)[..., 0]


# ---------------------------------------------------------------------------
# Hermitian eigenproblem
# ---------------------------------------------------------------------------


@dataclass
class HermEigen:
    """Spectral decomposition ``H = V diag(values) V*`` with ascending values."""

    values: np.ndarray
    vectors: np.ndarray
    sweeps: int = 0


def _off_norm(H):
    n = H.shape[-1]
    mask = ~np.eye(n, dtype=bool)
    return np.sqrt(np.sum(np.abs(H[..., mask]) ** 2, axis=-1))


def jacobi_eigh(H: np.ndarray):
    """Cyclic Jacobi on a stack of Hermitian matrices ``(..., n, n)``.

    Returns ``(values, vectors, sweeps)``; values are ascending along the last
    axis and the eigenvectors are the columns of ``vectors``.  No input
    checking is done here.
    """
    H = np.array(H, dtype=complex)
    batch = H.shape[:-2]
    n = H.shape[-1]
    H = H.reshape((-1, n, n))
    V = np.broadcast_to(np.eye(n, dtype=complex), H.shape).copy()
    scale = np.sqrt(np.sum(np.abs(H) ** 2, axis=(-1, -2)))
    target = _JACOBI_OFF_TOL * scale

    sweeps = 0
    while sweeps < _JACOBI_MAX_SWEEPS:
        off = _off_norm(H)
        if np.all(off <= target):
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                h = H[:, p, q]
                r = np.abs(h)
                active = r > 0.0
                if not np.any(active):
                    continue
                safe_r = np.where(active, r, 1.0)
                phase = np.where(active, h / safe_r, 1.0)
                a = H[:, p, p].real
                b = H[:, q, q].real
                theta = (b - a) / (2.0 * safe_r)
                t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
                t = np.where(theta == 0.0, 1.0, t)
                t = np.where(active, t, 0.0)
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # rotation acting on columns p, q: V2 = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                g_pp = c
                g_pq = s
                g_qp = -np.conj(phase) * s
                g_qq = np.conj(phase) * c

                Hp = H[:, :, p].copy()
                Hq = H[:, :, q]
                H[:, :, p] = Hp * g_pp[:, None] + Hq * g_qp[:, None]
                H[:, :, q] = Hp * g_pq[:, None] + Hq * g_qq[:, None]
                Hp = H[:, p, :].copy()
                Hq = H[:, q, :]
                H[:, p, :] = Hp * np.conj(g_pp)[:, None] + Hq * np.conj(g_qp)[:, None]
                H[:, q, :] = Hp * np.conj(g_pq)[:, None] + Hq * np.conj(g_qq)[:, None]
                H[:, p, q] = 0.0
                H[:, q, p] = 0.0
                H[:, p, p] = H[:, p, p].real
                H[:, q, q] = H[:, q, q].real

                Vp = V[:, :, p].copy()
                Vq = V[:, :, q]
                V[:, :, p] = Vp * g_pp[:, None] + Vq * g_qp[:, None]
                V[:, :, q] = Vp * g_pq[:, None] + Vq * g_qq[:, None]
    else:
        if np.any(_off_norm(H) > target):
            raise ConvergenceError(f"Jacobi did not converge in {_JACOBI_MAX_SWEEPS} sweeps")

    values = np.real(np.diagonal(H, axis1=-2, axis2=-1))
    order = np.argsort(values, axis=-1, kind="stable")
    values = np.take_along_axis(values, order, axis=-1)
    V = np.take_along_axis(V, order[:, None, :], axis=-1)
    return values.reshape(batch + (n,)), V.reshape(batch + (n, n)), sweeps


def hermitian_eigen(H) -> HermEigen:
    """Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Raises :class:`InputError` when ``H`` is not Hermitian to within
    ``1e-12 * ||H||``.  The input is symmetrized before the solve.
    """
    H = as_cmatrix(H)
    size = np.linalg.norm(H)
    if np.linalg.norm(H - H.conj().T) > HERMITIAN_TOL * max(size, np.finfo(float).tiny):
        raise InputError("matrix is not Hermitian")
    H = 0.5 * (H + H.conj().T)
    values, vectors, sweeps = jacobi_eigh(H)
    return HermEigen(values=values, vectors=vectors, sweeps=sweeps)


# ---------------------------------------------------------------------------
# Eigenvalues of general matrices
# ---------------------------------------------------------------------------


def _is_upper_triangular(A, rel=4 * EPS):
    lower = np.tril(A, -1)
    return np.max(np.abs(lower), initial=0.0) <= rel * np.linalg.norm(A)


def _quadratic_roots(b, c):
    """Roots of ``s**2 + b s + c`` without cancellation."""
    d = cmath.sqrt(b * b - 4 * c)
    # pick the sign so that |b + sign*d| is large
    if (np.conj(b) * d).real < 0:
        d = -d
    q = -0.5 * (b + d)
    if q == 0:
        return [0j, 0j]
    return [q, c / q]


def _polish(coeffs, root, steps=1):
    """Newton polish on a monic polynomial given by descending ``coeffs``."""
    for _ in range(steps):
        p = 0j
        dp = 0j
        for c in coeffs:
            dp = dp * root + p
            p = p * root + c
        if dp == 0:
            break
        new = root - p / dp
        # keep the step only when it reduces the residual
        pn = 0j
        for c in coeffs:
            pn = pn * new + c
        if abs(pn) <= abs(p):
            root = new
        else:
            break
    return root


def _cbrt(z):
    if z == 0:
        return 0j
    return cmath.exp(cmath.log(z) / 3.0)


def _cubic_roots(c2, c1, c0):
    """Roots of ``s**3 + c2 s**2 + c1 s + c0`` by Cardano's formula."""
    shift = c2 / 3.0
    p = c1 - c2 * c2 / 3.0
    q = 2.0 * c2 ** 3 / 27.0 - c2 * c1 / 3.0 + c0
    disc = cmath.sqrt(q * q / 4.0 + p ** 3 / 27.0)
    w1 = -q / 2.0 + disc
    w2 = -q / 2.0 - disc
    w = w1 if abs(w1) >= abs(w2) else w2
    C = _cbrt(w)
    omega = complex(-0.5, math.sqrt(3.0) / 2.0)
    roots = []
    for k in range(3):
        Ck = C * omega ** k
        t = Ck - p / (3.0 * Ck) if Ck != 0 else 0j
        roots.append(t - shift)
    return roots


def _char_poly3(A):
    tr = A[0, 0] + A[1, 1] + A[2, 2]
    m = (A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
         + A[0, 0] * A[2, 2] - A[0, 2] * A[2, 0]
         + A[1, 1] * A[2, 2] - A[1, 2] * A[2, 1])
    det = (A[0, 0] * (A[1, 1] * A[2, 2] - A[1, 2] * A[2, 1])
           - A[0, 1] * (A[1, 0] * A[2, 2] - A[1, 2] * A[2, 0])
           + A[0, 2] * (A[1, 0] * A[2, 1] - A[1, 1] * A[2, 0]))
    return complex(-tr), complex(m), complex(-det)


def _small_eigenvalues(A):
    n = A.shape[0]
    S = max(np.linalg.norm(A), np.finfo(float).tiny)
    if n == 1:
        return [complex(A[0, 0])]
    if n == 2:
        b = complex(-(A[0, 0] + A[1, 1]))
        c = complex(A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0])
        if abs(b * b - 4 * c) <= _ROOT_SNAP * EPS * S * S:
            return [-b / 2, -b / 2]
        return [_polish([1, b, c], r) for r in _quadratic_roots(b, c)]

    c2, c1, c0 = _char_poly3(A)

    def p(s):
        return ((s + c2) * s + c1) * s + c0

    def dp(s):
        return (3 * s + 2 * c2) * s + c1

    # a multiple root of p is a simple root of p' (double) or of p'' (triple)
    m = -c2 / 3.0
    if abs(p(m)) <= _ROOT_SNAP * EPS * S ** 3 and abs(dp(m)) <= _ROOT_SNAP * EPS * S ** 2:
        return [m, m, m]
    best = None
    for r in _quadratic_roots(2 * c2 / 3.0, c1 / 3.0):
        res = abs(p(r))
        if res <= _ROOT_SNAP * EPS * S ** 3 and (best is None or res < best[0]):
            best = (res, r)
    if best is not None:
        r = best[1]
        return [r, r, -c2 - 2 * r]
    return [_polish([1, c2, c1, c0], r) for r in _cubic_roots(c2, c1, c0)]


def hessenberg(A: np.ndarray):
    """Householder reduction to upper Hessenberg form ``H = Q* A Q``."""
    H = np.array(A, dtype=complex)
    n = H.shape[0]
    Q = np.eye(n, dtype=complex)
    for k in range(n - 2):
        x = H[k + 1:, k].copy()
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x.copy()
        v[0] += phase * alpha
        v /= np.linalg.norm(v)
        H[k + 1:, :] -= 2.0 * np.outer(v, v.conj() @ H[k + 1:, :])
        H[:, k + 1:] -= 2.0 * np.outer(H[:, k + 1:] @ v, v.conj())
        Q[:, k + 1:] -= 2.0 * np.outer(Q[:, k + 1:] @ v, v.conj())
        H[k + 2:, k] = 0.0
    return H, Q


def _wilkinson_shift(a, b, c, d):
    tr = a + d
    det = a * d - b * c
    r1, r2 = _quadratic_roots(-tr, det)
    return r1 if abs(r1 - d) <= abs(r2 - d) else r2


def _qr_eigenvalues(A):
    n = A.shape[0]
    H, _ = hessenberg(A)
    eigs = [0j] * n
    hi = n - 1
    iters = 0
    since_deflation = 0
    cap = 100 * n
    while hi >= 0:
        if hi == 0:
            eigs[0] = H[0, 0]
            break
        lo = hi
        while lo > 0:
            sub = abs(H[lo, lo - 1])
            if sub <= EPS * (abs(H[lo, lo]) + abs(H[lo - 1, lo - 1])) or sub == 0.0:
                H[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            eigs[hi] = H[hi, hi]
            hi -= 1
            since_deflation = 0
            continue
        iters += 1
        since_deflation += 1
        if iters > cap:
            raise ConvergenceError(f"QR iteration did not converge in {cap} steps")
        if since_deflation % 11 == 0:
            # exceptional shift to break cycles
            sigma = H[hi, hi] + 0.75 * abs(H[hi, hi - 1]) * complex(1.0, 1.0)
        else:
            sigma = _wilkinson_shift(H[hi - 1, hi - 1], H[hi - 1, hi], H[hi, hi - 1], H[hi, hi])
        m = hi - lo + 1
        block = H[lo:hi + 1, lo:hi + 1] - sigma * np.eye(m)
        rots = []
        for k in range(m - 1):
            a = block[k, k]
            b = block[k + 1, k]
            r = math.hypot(abs(a), abs(b))
            if r == 0.0:
                c, s = 1.0, 0j
            else:
                c = abs(a) / r if a != 0 else 0.0
                s = (a / abs(a) if a != 0 else 1.0) * np.conj(b) / r
            G = np.array([[c, s], [-np.conj(s), c]], dtype=complex)
            block[k:k + 2, k:] = G @ block[k:k + 2, k:]
            rots.append(G)
        for k, G in enumerate(rots):
            block[:k + 2, k:k + 2] = block[:k + 2, k:k + 2] @ G.conj().T
        H[lo:hi + 1, lo:hi + 1] = block + sigma * np.eye(m)
        # the rest of the matrix does not affect eigenvalues of this window
    return eigs


def eigenvalues(A) -> list[complex]:
    """All eigenvalues of ``A`` with multiplicity.

    Triangular input returns its diagonal.  For ``n <= 3`` the characteristic
    polynomial is solved in closed form and Newton-polished; numerically
    multiple roots are recognized through the derivative and returned exactly
    repeated.  Larger matrices use Hessenberg reduction and Wilkinson-shifted QR.
    """
    A = as_cmatrix(A)
    n = A.shape[0]
    if _is_upper_triangular(A):
        return [complex(v) for v in np.diag(A)]
    if n <= 3:
        return [complex(v) for v in _small_eigenvalues(A)]
    return [complex(v) for v in _qr_eigenvalues(A)]


# ---------------------------------------------------------------------------
# Spectrum clustering and ordered Schur form
# ---------------------------------------------------------------------------


@dataclass
class SpectrumClusters:
    clusters: list[tuple[complex, int]] = field(default_factory=list)
    threshold: float = 0.0

    @property
    def centers(self):
        return [c for c, _ in self.clusters]

    @property
    def multiplicities(self):
        return [m for _, m in self.clusters]

    def __len__(self):
        return len(self.clusters)


def cluster_spectrum(eigs, scale: float = 0.0, rel_tol: float = CLUSTER_TOL) -> SpectrumClusters:
    """Single-linkage clustering of eigenvalues with threshold ``rel_tol*(1+scale)``.

    Clusters appear in order of their first member; centers are plain means.
    """
    eigs = [complex(e) for e in eigs]
    tau = rel_tol * (1.0 + scale)
    parent = list(range(len(eigs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(eigs)):
        for j in range(i + 1, len(eigs)):
            if abs(eigs[i] - eigs[j]) <= tau:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[complex]] = {}
    for i, e in enumerate(eigs):
        groups.setdefault(find(i), []).append(e)
    clusters = [(complex(sum(g) / len(g)), len(g)) for _, g in sorted(groups.items())]
    return SpectrumClusters(clusters=clusters, threshold=tau)


def _householder_completion(v):
    """Unitary matrix whose first column is the unit vector ``v``."""
    n = v.shape[0]
    a = v[0]
    phase = a / abs(a) if a != 0 else 1.0
    w = v.astype(complex).copy()
    w[0] += phase
    nw = np.linalg.norm(w)
    Q = np.eye(n, dtype=complex)
    if nw == 0.0:
        return Q
    w /= nw
    Q -= 2.0 * np.outer(w, w.conj())
    Q[:, 0] *= -phase
    return Q


def _null_vector(M):
    _, _, vh = np.linalg.svd(M)
    v = vh[-1].conj()
    return v / np.linalg.norm(v)


def _match_order(eigs, order, tau):
    remaining = list(eigs)
    matched = []
    for target in order:
        if not remaining:
            raise InputError("order has more entries than the spectrum")
        k = min(range(len(remaining)), key=lambda i: abs(remaining[i] - target))
        if abs(remaining[k] - target) > tau:
            raise InputError(f"order entry {target} does not match the spectrum")
        matched.append(remaining.pop(k))
    if remaining:
        raise InputError("order does not list every eigenvalue")
    return matched


def schur_triangularize(A, order=None):
    """Unitary ``U`` and upper triangular ``T = U* A U`` with a prescribed diagonal.

    ``order`` lists the eigenvalues (with multiplicity) in the sequence they
    should appear on the diagonal of ``T``; it must match :func:`eigenvalues`
    within the clustering tolerance.  Default is the computed order.
    """
    A = as_cmatrix(A)
    n = A.shape[0]
    eigs = eigenvalues(A)
    if order is None:
        order = eigs
    if len(order) != n:
        raise InputError(f"order must have {n} entries, got {len(order)}")
    tau = CLUSTER_TOL * (1.0 + operator_norm(A))
    targets = _match_order(eigs, [complex(o) for o in order], tau)

    U = np.eye(n, dtype=complex)
    for k in range(n - 1):
        M = U.conj().T @ A @ U
        sub = M[k:, k:]
        v = _null_vector(sub - targets[k] * np.eye(n - k))
        Q = _householder_completion(v)
        U[:, k:] = U[:, k:] @ Q
    # one re-orthonormalization pass keeps U unitary to working precision
    U, R = np.linalg.qr(U)
    U = U * (np.diag(R) / np.abs(np.diag(R)))[None, :]
    T = np.triu(U.conj().T @ A @ U)
    return U, T
