"""3x3 matrices with a repeated eigenvalue.

Every such matrix is unitarily similar to an upper triangular ``T`` with the
repeated eigenvalue ``mu`` first, ``T = [[mu, x, y], [0, mu', z], [0, 0, lam]]``.
Diagonal unitary scaling makes ``x, z >= 0`` so the form is described by
``u = |x|, v = |y|, w = |z|``, the phase of ``y`` and ``rho = |lam - mu|``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..errors import InputError
from ..matcore import as_cmatrix, cluster_spectrum, eigenvalues, operator_norm, schur_triangularize
from ..oracle import CERT_TOL, Method, StampfliResult, certificate_margin, stampfli_oracle
from .polynomials import build_PA, positive_roots

log = logging.getLogger(__name__)

#: relative threshold on ``uvw`` (and on ``|u - w|``) for the degenerate branches
TAU_Z = 1e-9
TOE_THRESHOLD = 2.0 - math.sqrt(3.0)


@dataclass
class TriangularForm3:
    """Canonical triangular form ``A = U T U*`` of a 3x3 matrix with a repeated eigenvalue."""

    U: np.ndarray
    T: np.ndarray
    kind: str  # "singleton" or "doubleton"
    mu: complex
    lam: complex
    u: float
    v: float
    w: float
    y: complex
    phi: float  # arg(x conj(y) z); nan unless u*v*w > 0

    @property
    def rho(self) -> float:
        return abs(self.lam - self.mu)

    @property
    def scale(self) -> float:
        return max(self.u, self.v, self.w, self.rho)


def _phase(z):
    return z / abs(z) if z != 0 else 1.0


def canonical_3x3(A, rel_tol: float | None = None):
    """Canonical triangular form, or ``None`` when the three eigenvalues are distinct."""
    A = as_cmatrix(A)
    if A.shape[0] != 3:
        raise InputError("canonical_3x3 needs a 3x3 matrix")
    eigs = eigenvalues(A)
    kw = {} if rel_tol is None else {"rel_tol": rel_tol}
    clusters = cluster_spectrum(eigs, operator_norm(A), **kw)
    if len(clusters) == 1:
        kind = "singleton"
        c = clusters.centers[0]
        order = [c, c, c]
    elif len(clusters) == 2:
        kind = "doubleton"
        (c1, m1), (c2, _) = clusters.clusters
        mu, simple = (c1, c2) if m1 == 2 else (c2, c1)
        order = [mu, mu, simple]
    else:
        return None
    U, T = schur_triangularize(A, order)
    d1 = 1.0
    d2 = d1 * np.conj(_phase(T[0, 1]))
    d3 = d2 * np.conj(_phase(T[1, 2]))
    D = np.diag([d1, d2, d3])
    T = D.conj() @ T @ D
    U = U @ D
    if kind == "singleton":
        mu = lam = complex(np.trace(T) / 3)
    else:
        mu = complex((T[0, 0] + T[1, 1]) / 2)
        lam = complex(T[2, 2])
    u, w = float(abs(T[0, 1])), float(abs(T[1, 2]))
    y = complex(T[0, 2])
    v = abs(y)
    # arg(x conj(y) z) with x, z real nonnegative
    phi = float(np.angle(np.conj(y))) if u * v * w > 0 else float("nan")
    if phi == -math.pi:
        phi = math.pi
    return TriangularForm3(U=U, T=T, kind=kind, mu=mu, lam=lam, u=u, v=v, w=w, y=y, phi=phi)


def st_singleton_xyz0(form: TriangularForm3, tau_z: float = TAU_Z):
    """The eigenvalue when ``xyz = 0`` (up to ``tau_z``), else ``None``."""
    if form.kind != "singleton":
        return None
    s = form.scale
    if s == 0.0 or form.u * form.v * form.w <= tau_z * s ** 3:
        return form.lam
    return None


def st_toe_abs(u: float, v: float) -> float:
    """``|St(A) - lam|`` when the (1,2) and (2,3) entries have equal modulus ``u > 0``."""
    if u <= 0:
        raise InputError("st_toe_abs needs u > 0")
    if v / u <= TOE_THRESHOLD:
        return u * u * v / (u * u - v * v)
    return u * u * (2.0 * math.sqrt(6.0 * u * u + v * v) - v) / (2.0 * (8.0 * u * u + v * v))


def _result(A, point, method, norm, **details):
    point = complex(point)
    margin = certificate_margin(A, point)
    details["norm"] = norm
    return StampfliResult(point=point, min_norm=operator_norm(A - point * np.eye(3)), method=method,
                          certificate_margin=margin, details=details)


def st_3x3_singleton(A, tol: float = 1e-9, form: TriangularForm3 | None = None):
    """Stampfli point of a 3x3 matrix with a single (triple) eigenvalue.

    Picks among the ``xyz = 0``, equal-modulus and general branches.  In the
    general branch every positive root of the quintic gives a candidate; the
    one passing the maximal-numerical-range test is returned (normally the
    smallest).  With no passing candidate the oracle is used and the method
    is ``fallback``.
    """
    A = as_cmatrix(A)
    form = canonical_3x3(A) if form is None else form
    if form is None or form.kind != "singleton":
        raise InputError("matrix does not have a single repeated eigenvalue")
    norm = operator_norm(A)
    lam = st_singleton_xyz0(form)
    if lam is not None:
        return _result(A, lam, Method.SINGLETON3_XYZ0, norm)
    u, v, w, phi = form.u, form.v, form.w, form.phi
    rot = complex(math.cos(phi), math.sin(phi))
    if abs(u - w) <= TAU_Z * form.scale:
        r = st_toe_abs(0.5 * (u + w), v)
        return _result(A, form.lam + r * rot, Method.SINGLETON3_TOE, norm)

    roots = positive_roots(build_PA(u, v, w))
    bound = -CERT_TOL * (1.0 + norm)
    margins = [certificate_margin(A, form.lam + r * rot) for r in roots]
    passing = [k for k, m in enumerate(margins) if m >= bound]
    if passing:
        k = passing[0]
        if k != 0:
            log.warning("selected root %d of %d, not the smallest", k, len(roots))
        return _result(A, form.lam + roots[k] * rot, Method.SINGLETON3_GENERAL, norm,
                       roots=roots, selected_index=k, margins=margins)
    log.warning("no quintic root passes the optimality test; using the oracle")
    res = stampfli_oracle(A, tol)
    res.method = Method.FALLBACK
    res.details.update(roots=roots, margins=margins, fallback_reason="no certified root")
    return res


def multiple_eig_st_criterion(A, tol: float = 1e-9) -> bool:
    """Whether ``St(A)`` equals the repeated eigenvalue of a 3x3 matrix.

    For a single triple eigenvalue this is ``xyz = 0``.  For a double
    eigenvalue ``mu`` and simple ``lam`` three conditions on the canonical
    form are checked, each with slack ``tol`` relative to the matching power
    of ``max(u, v, w, rho)``.
    """
    form = canonical_3x3(A)
    if form is None:
        raise InputError("matrix has three distinct eigenvalues")
    if form.kind == "singleton":
        return st_singleton_xyz0(form, tol) is not None
    return doubleton_conditions(form, tol)["holds"]


def doubleton_conditions(form: TriangularForm3, tol: float = 1e-9) -> dict:
    u, v, w, rho = form.u, form.v, form.w, form.rho
    S = form.scale
    if S == 0.0:
        return {"arg": True, "ineq": True, "eq": True, "holds": True}
    S2, S4 = S * S, S ** 4
    q = u * form.y * w * (form.lam - form.mu)
    arg_ok = abs(q.imag) <= tol * S4 and q.real <= tol * S4
    rad = (u * u - rho * rho) * (w * w + rho * rho)
    if rad < -tol * S4:
        ineq_ok = False
    else:
        ineq_ok = abs(rho * v - u * w) <= math.sqrt(max(rad, 0.0)) + tol * S2
    eq = (v * w * rho ** 3 + u * v * v * rho * rho + v * w * (v * v + w * w - u * u) * rho
          - u * v * v * w * w)
    eq_ok = abs(eq) <= tol * S4
    return {"arg": arg_ok, "ineq": ineq_ok, "eq": eq_ok, "holds": arg_ok and ineq_ok and eq_ok}
