"""Roberts orthogonality of a matrix to the identity.

``A`` is Roberts orthogonal to ``I`` when ``||A + nu I|| = ||A - nu I||`` for
every complex ``nu``.  :func:`roberts_numeric` samples that definition on a
fixed grid, so it is a necessary check only; the classification functions
give the exact answer for quadratic matrices and for 3x3 matrices whose
numerical range is a circular disk.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .closedform.blocks import quadratic_coefficients, st_quadratic
from .closedform.three import canonical_3x3
from .errors import DegenerateInputError
from .matcore import as_cmatrix, operator_norm
from .numrange import nr_boundary
from .oracle import f_profile, stampfli_oracle

ROBERTS_TOL = 1e-8
N_MODULI = 25
N_ANGLES = 32
CIRCLE_TOL = 1e-6
ST_ZERO_TOL = 1e-6


class Classification(str, enum.Enum):
    NILPOTENT_QUADRATIC = "nilpotent_quadratic"
    SCALED_INVOLUTION = "scaled_involution"
    REDUCIBLE_SCALAR_PLUS_NILPOTENT2 = "reducible_scalar_plus_nilpotent2"
    NILPOTENT3_CIRCULAR = "nilpotent3_circular"
    NOT_ORTHOGONAL = "not_orthogonal"
    UNCLASSIFIED = "unclassified"

    def __str__(self):
        return self.value


ORTHOGONAL_CLASSES = frozenset({
    Classification.NILPOTENT_QUADRATIC,
    Classification.SCALED_INVOLUTION,
    Classification.REDUCIBLE_SCALAR_PLUS_NILPOTENT2,
    Classification.NILPOTENT3_CIRCULAR,
})


@dataclass
class RobertsReport:
    orthogonal: bool
    max_asymmetry: float
    worst_nu: complex
    stampfli_zero: bool
    classification: Classification
    stampfli_point: complex = 0j


def nu_grid(norm: float) -> np.ndarray:
    """Sample points ``r exp(i theta)``, ordered by ``(r, theta)``."""
    radii = norm * np.logspace(-3.0, 3.0, N_MODULI)
    angles = 2.0 * np.pi * np.arange(N_ANGLES) / N_ANGLES
    return (radii[:, None] * np.exp(1j * angles)[None, :]).reshape(-1)


def asymmetries(A, nus) -> np.ndarray:
    """``| ||A + nu I|| - ||A - nu I|| | / (||A|| + |nu|)`` for each ``nu``."""
    A = as_cmatrix(A)
    nus = np.asarray(nus, dtype=complex).reshape(-1)
    plus = np.asarray(f_profile(A, -nus))
    minus = np.asarray(f_profile(A, nus))
    return np.abs(plus - minus) / (operator_norm(A) + np.abs(nus))


def classify_quadratic(A, tol: float = 1e-9):
    """Exact verdict for a matrix satisfying ``A**2 + pA + qI = 0``.

    Nilpotent and scaled-involution matrices are orthogonal, any other
    quadratic matrix is not.  Returns ``None`` when ``A`` is not quadratic.
    """
    A = as_cmatrix(A)
    if st_quadratic(A, tol) is None:
        return None
    p, q, _ = quadratic_coefficients(A)
    s = operator_norm(A)
    if abs(p) > tol * s:
        return Classification.NOT_ORTHOGONAL
    if abs(q) <= tol * s * s:
        return Classification.NILPOTENT_QUADRATIC
    return Classification.SCALED_INVOLUTION


def circular_conditions(A, tol: float = 1e-8, K: int = 720):
    """Canonical form and circularity checks for a 3x3 matrix, or ``None`` if the
    spectrum is not ``{0, 0, lam}``.
    """
    A = as_cmatrix(A)
    form = canonical_3x3(A)
    if form is None:
        return None
    size = operator_norm(A)
    if size == 0.0 or abs(form.mu) > tol * size:
        return None
    u, v, w = form.u, form.v, form.w
    lam = form.lam if form.kind == "doubleton" else 0j
    c1 = abs(u * np.conj(form.y) * w + lam * (v * v + w * w)) <= tol * size ** 3
    c2 = u * u + v * v + w * w >= 4 * abs(lam) ** 2 - tol * size * size
    support = nr_boundary(A, K).support
    constant = float(support.max() - support.min()) <= CIRCLE_TOL * size
    return {"form": form, "lam": lam, "c1": bool(c1), "c2": bool(c2), "constant_support": constant}


def classify_circular3(A, tol: float = 1e-8):
    """Exact verdict for a 3x3 matrix whose numerical range is a disk centered at 0.

    Returns ``None`` when circularity cannot be confirmed, both algebraically
    and by a constant support function.
    """
    checks = circular_conditions(A, tol)
    if checks is None or not (checks["c1"] and checks["c2"] and checks["constant_support"]):
        return None
    form = checks["form"]
    s = operator_norm(as_cmatrix(A))
    rho = abs(checks["lam"])
    if rho <= tol * s:
        return Classification.NILPOTENT3_CIRCULAR
    if form.v <= tol * s and form.w <= tol * s and 2 * rho <= form.u * (1 + tol):
        return Classification.REDUCIBLE_SCALAR_PLUS_NILPOTENT2
    return Classification.NOT_ORTHOGONAL


def roberts_numeric(A, tol: float = ROBERTS_TOL) -> RobertsReport:
    """Sampled test of Roberts orthogonality to ``I``, with a classification
    from the exact characterizations when one applies.
    """
    A = as_cmatrix(A)
    norm = operator_norm(A)
    if norm == 0.0:
        raise DegenerateInputError("Roberts test needs a nonzero matrix")
    nus = nu_grid(norm)
    asym = asymmetries(A, nus)
    k = int(np.argmax(asym))
    orthogonal = bool(asym[k] <= tol)

    st = stampfli_oracle(A).point
    stampfli_zero = abs(st) <= ST_ZERO_TOL * norm

    cls = classify_quadratic(A)
    if cls is None and A.shape[0] == 3:
        cls = classify_circular3(A)
    if cls is None:
        cls = Classification.UNCLASSIFIED if orthogonal else Classification.NOT_ORTHOGONAL
    return RobertsReport(orthogonal=orthogonal, max_asymmetry=float(asym[k]), worst_nu=complex(nus[k]),
                         stampfli_zero=bool(stampfli_zero), classification=cls, stampfli_point=st)
