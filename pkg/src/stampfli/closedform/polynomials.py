"""The quintic whose positive roots give the Stampfli displacement of a
singleton-spectrum 3x3 matrix, the resultant it comes from, and a real
positive-root finder built on balanced companion matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InputError
from ..matcore import eigenvalues

TRIM_TOL = 1e-14
IMAG_TOL = 1e-8
ZERO_ROOT_TOL = 1e-12


@dataclass(init=False)
class RealPolynomial:
    """Real polynomial with ``coeffs[k]`` the coefficient of ``s**k``."""

    coeffs: np.ndarray

    def __init__(self, coeffs, trim_tol: float = TRIM_TOL):
        c = np.array(coeffs, dtype=float).reshape(-1)
        if c.size and trim_tol > 0:
            cut = trim_tol * np.max(np.abs(c))
            k = c.size
            while k > 1 and abs(c[k - 1]) <= cut:
                k -= 1
            c = c[:k]
        self.coeffs = c

    @property
    def degree(self) -> int:
        nz = np.flatnonzero(self.coeffs)
        return int(nz[-1]) if nz.size else -1

    def __call__(self, s):
        return np.polynomial.polynomial.polyval(s, self.coeffs)

    def derivative(self) -> "RealPolynomial":
        return RealPolynomial(np.polynomial.polynomial.polyder(self.coeffs), trim_tol=0)

    def __repr__(self):
        return f"RealPolynomial({self.coeffs.tolist()})"


def _pa_coefficients(u, v, w):
    u2, v2, w2 = u * u, v * v, w * w
    c5 = 4 * (u2 + v2) * (u2 ** 3 + 3 * u2 ** 2 * (v2 + w2) + (v2 + w2) ** 3
                          + 3 * u2 * (v2 ** 2 - 7 * v2 * w2 + w2 ** 2))
    c4 = 4 * u * v * w * (4 * u2 ** 3 + 6 * u2 ** 2 * (2 * v2 - 3 * w2)
                          + (v2 + w2) ** 2 * (4 * v2 + w2)
                          + 6 * u2 * (2 * v2 ** 2 - 6 * v2 * w2 + w2 ** 2))
    c3 = 3 * u2 * w2 * (2 * u2 ** 3 + 7 * v2 ** 3 + 13 * v2 ** 2 * w2 + 6 * v2 * w2 ** 2
                        + u2 ** 2 * (11 * v2 - 5 * w2) + 2 * u2 * (8 * v2 ** 2 - 14 * v2 * w2 + w2 ** 2))
    c2 = u ** 3 * v * w ** 3 * (9 * u2 ** 2 + 7 * v2 ** 2 + 18 * v2 * w2 + 6 * w2 ** 2
                                + 4 * u2 * (4 * v2 - 3 * w2))
    c1 = u ** 4 * v2 * w ** 4 * (-5 * v2 + 3 * w2)
    c0 = -3 * u ** 5 * v ** 3 * w ** 5
    return [c0, c1, c2, c3, c4, c5]


def build_PA(u: float, v: float, w: float) -> RealPolynomial:
    """Degree-5 polynomial whose positive roots are the candidate ``|zeta|``.

    ``u, v, w`` are the moduli of the (1,2), (1,3), (2,3) entries of the
    triangular form.  The polynomial is homogeneous of total degree 13 in
    ``(s, u, v, w)``; leading coefficients that vanish at unit scale (for
    instance both top ones when ``u == v == w``) are dropped.
    """
    u, v, w = float(u), float(v), float(w)
    if min(u, v, w) <= 0:
        raise InputError("build_PA needs u, v, w > 0")
    m = max(u, v, w)
    unit = np.array(_pa_coefficients(u / m, v / m, w / m))
    cut = TRIM_TOL * np.max(np.abs(unit))
    k = unit.size
    while k > 1 and abs(unit[k - 1]) <= cut:
        k -= 1
    coeffs = unit[:k] * m ** (13 - np.arange(k))
    return RealPolynomial(coeffs, trim_tol=0)


def resultant_matrix(x, y, z) -> np.ndarray:
    a1, a2, a3, a4 = 2 * x, -3 * x * z, x * z * z, 2 * y - x * z
    b1 = 4 * x * x + y * y + z * z - x * y * z
    b2 = -(z ** 3 + x * x * z + y * y * z + 6 * x * y - x * y * z * z)
    b3 = x * x + 4 * y * y + z * z - x * y * z
    return np.array([
        [a1, 0, b1, 0, 0],
        [a2, a1, b2, b1, 0],
        [a3, a2, b3, b2, b1],
        [a4, a3, 0, b3, b2],
        [0, a4, 0, 0, b3],
    ], dtype=float)


def resultant_res(x: float, y: float, z: float) -> float:
    """Resultant of the cubic and quadratic whose common root certifies ``St = 0``
    for the unipotent triangular matrix with off-diagonal entries ``x, y, z``.
    """
    return float(np.linalg.det(resultant_matrix(x, y, z)))


def balance(C: np.ndarray, radix: float = 2.0) -> np.ndarray:
    """Parlett-Reinsch diagonal similarity equalizing row and column norms."""
    C = np.array(C, dtype=complex)
    n = C.shape[0]
    converged = False
    while not converged:
        converged = True
        for i in range(n):
            col = np.sum(np.abs(C[:, i])) - abs(C[i, i])
            row = np.sum(np.abs(C[i, :])) - abs(C[i, i])
            if col == 0.0 or row == 0.0:
                continue
            f = 1.0
            total = col + row
            while col < row / radix:
                col *= radix
                row /= radix
                f *= radix
            while col >= row * radix:
                col /= radix
                row *= radix
                f /= radix
            if (col + row) < 0.95 * total:
                converged = False
                C[i, :] /= f
                C[:, i] *= f
    return C


def companion(p: RealPolynomial) -> np.ndarray:
    c = p.coeffs[: p.degree + 1]
    monic = c / c[-1]
    d = p.degree
    C = np.zeros((d, d), dtype=complex)
    C[0, :] = -monic[::-1][1:]
    C[np.arange(1, d), np.arange(d - 1)] = 1.0
    return C


def _newton(coeffs, r, steps=2):
    dcoeffs = np.polynomial.polynomial.polyder(coeffs)
    for _ in range(steps):
        f = np.polynomial.polynomial.polyval(r, coeffs)
        df = np.polynomial.polynomial.polyval(r, dcoeffs)
        if df == 0:
            break
        nr = r - f / df
        if abs(np.polynomial.polynomial.polyval(nr, coeffs)) <= abs(f):
            r = nr
        else:
            break
    return r


def all_roots(p: RealPolynomial) -> list[complex]:
    if p.degree < 1:
        raise InputError("polynomial of degree < 1 has no roots to find")
    C = balance(companion(p))
    coeffs = p.coeffs[: p.degree + 1]
    return [complex(_newton(coeffs, complex(r))) for r in eigenvalues(C)]


def positive_roots(p: RealPolynomial) -> list[float]:
    """Positive real roots, ascending, with multiplicity."""
    roots = all_roots(p)
    scale = max(abs(r) for r in roots) or 1.0
    out = [r.real for r in roots
           if abs(r.imag) <= IMAG_TOL * abs(r) and r.real > ZERO_ROOT_TOL * scale]
    return sorted(out)
