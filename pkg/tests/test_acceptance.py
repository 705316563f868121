"""Acceptance suite: fourteen criteria, each at its stated tolerance.

Every criterion is a function returning ``(passed, detail)``.  Under pytest
each becomes a test and a PASS/FAIL line per criterion is printed in the
terminal summary; run as a script (``python3 tests/test_acceptance.py``) it
prints the same lines directly.

Criterion 10 checks the optimality certificate of every Stampfli point
computed by the other criteria, so it runs last.
"""

import math
import sys

import numpy as np
import pytest

import generators as gen
from stampfli import (
    build_PA,
    certificate_margin,
    gen_almost_normal,
    multiple_eig_st_criterion,
    operator_norm,
    positive_roots,
    resultant_res,
    roberts_numeric,
    st_2x2,
    st_3x3_singleton,
    st_block_scalar,
    st_dispatch,
    st_quadratic,
    st_toe_abs,
    st_tridiagonal_constant,
    stampfli_oracle,
)
from stampfli.closedform import canonical_3x3
from stampfli.closedform.polynomials import resultant_matrix
from stampfli.hull import hull_distance
from stampfli.io import corpus_matrix

RESULTS = {}
COMPUTED = []  # (label, A, point, margin or None)


def record(label, A, point, margin=None):
    COMPUTED.append((label, np.asarray(A, dtype=complex), complex(point), margin))
    return complex(point)


def oracle(A, label):
    res = stampfli_oracle(A)
    record(label, A, res.point, res.certificate_margin)
    return res.point


def scale_of(A):
    return 1.0 + operator_norm(A)


def criterion_01():
    lam = 0.3 - 1.1j
    A = gen.triangular3(lam, 8, -1, 7)
    roots = positive_roots(build_PA(8, 1, 7))
    res = st_3x3_singleton(A)
    record("c1 pipeline", A, res.point, res.certificate_margin)
    ref = oracle(A, "c1 oracle")
    checks = [
        len(roots) == 1,
        abs(roots[0] - 0.7003) <= 5e-4,
        abs(res.point - (lam - roots[0])) <= 1e-9 * scale_of(A),
        abs(res.point - ref) <= 1e-6,
    ]
    return all(checks), f"root={roots[0]:.6f} st-lam={res.point - lam:.6f} oracle diff={abs(res.point - ref):.2e}"


def criterion_02():
    lam = -2.0 + 0.5j
    A = gen.triangular3(lam, 8, -1, 7.5)
    roots = positive_roots(build_PA(8, 1, 7.5))
    res = st_3x3_singleton(A)
    record("c2 pipeline", A, res.point, res.certificate_margin)
    ref = oracle(A, "c2 oracle")
    bound = -1e-6 * scale_of(A)
    passing = [m >= bound for m in res.details.get("margins", [])]
    checks = [
        len(roots) == 3,
        all(abs(r - e) <= 5e-3 for r, e in zip(roots, [0.833, 1.367, 2.101])),
        passing == [True, False, False],
        res.details.get("selected_index") == 0,
        abs(res.point - (lam - 0.833)) <= 5e-4,
        abs(res.point - ref) <= 1e-6,
    ]
    return all(checks), (f"roots={[round(r, 4) for r in roots]} passing={passing} "
                         f"st-lam={res.point - lam:.6f} oracle diff={abs(res.point - ref):.2e}")


def criterion_03():
    exact = st_toe_abs(4, 2)
    lam = 1.5 + 2j
    A = gen.triangular3(lam, 4, -2, 4)
    res = st_3x3_singleton(A)
    record("c3 pipeline", A, res.point, res.certificate_margin)
    ref = oracle(A, "c3 oracle")
    checks = [
        abs(exact - 12 / 11) <= 2 * np.finfo(float).eps,
        abs(res.point - (lam - 12 / 11)) <= 1e-9,
        abs(res.point - ref) <= 1e-6,
    ]
    return all(checks), f"toe={exact!r} pipeline err={abs(res.point - (lam - 12 / 11)):.2e} oracle diff={abs(res.point - ref):.2e}"


def criterion_04():
    rng = np.random.default_rng(4)
    worst_pipe, worst_root = 0.0, 0.0
    ok = True
    for u in (1.0, 5.0, 9.3):
        target = (2 * math.sqrt(7) - 1) * u / 18
        for A in (gen.triangular3(0, u, -u, u), gen.rotate(rng, gen.triangular3(0.5j, u, -u, u))):
            res = st_dispatch(A)
            record(f"c4 u={u}", A, res.point, res.certificate_margin)
            lam = np.trace(A) / 3
            err = abs(abs(res.point - lam) - target)
            worst_pipe = max(worst_pipe, err)
            ok &= err <= 1e-9
        roots = positive_roots(build_PA(u, u, u))
        rel = min(abs(r - target) / target for r in roots)
        worst_root = max(worst_root, rel)
        ok &= rel <= 1e-8
    p1 = build_PA(1, 1, 1).coeffs
    ok &= np.allclose(p1, [-3, -2, 44, 72], rtol=0, atol=1e-12)
    return bool(ok), f"pipeline err={worst_pipe:.2e} root rel err={worst_root:.2e} P(1,1,1)={p1.tolist()}"


def criterion_05():
    rng = np.random.default_rng(5)
    worst = 0.0
    for _ in range(100):
        A = gen.crandn(rng, 2, 2)
        cf = record("c5 closed", A, st_2x2(A))
        ref = oracle(A, "c5 oracle")
        worst = max(worst, abs(cf - ref) / scale_of(A))
    return worst <= 1e-7, f"max |closed - oracle|/(1+||A||) = {worst:.2e}"


def criterion_06():
    rng = np.random.default_rng(6)
    worst = {}

    def check(kind, A, st):
        if st is None:
            worst[kind] = math.inf
            return
        record(f"c6 {kind}", A, st)
        ref = oracle(A, f"c6 {kind} oracle")
        worst[kind] = max(worst.get(kind, 0.0), abs(st - ref) / scale_of(A))

    for _ in range(50):
        n1, n2 = rng.integers(1, 4, size=2)
        a1, a2 = gen.crandn(rng, 2)
        A = gen.block_scalar_normal(rng, n1, n2, a1, a2)
        check("block_scalar", A, st_block_scalar(A, n1, n2))
    for _ in range(50):
        n1, n2 = rng.integers(1, 4, size=2)
        A = gen.block_scalar_equal(rng, n1, n2, gen.crandn(rng, 1)[0])
        check("equal_blocks", A, st_block_scalar(A, n1, n2))
    for _ in range(50):
        n1, n2 = rng.integers(1, 4, size=2)
        l1, l2 = gen.crandn(rng, 2)
        A = gen.rotate(rng, gen.quadratic(rng, n1, n2, l1, l2))
        check("quadratic", A, st_quadratic(A))
    for k in range(50):
        A = gen.tridiagonal_constant(rng, 5 if k % 2 == 0 else 7, gen.crandn(rng, 1)[0])
        check("tridiagonal", A, st_tridiagonal_constant(A))
    ok = all(v <= 1e-6 for v in worst.values())
    return ok, " ".join(f"{k}={v:.2e}" for k, v in worst.items())


def criterion_07():
    rng = np.random.default_rng(7)
    worst_zero, closest_nonzero = 0.0, math.inf
    for k in range(50):
        lam = gen.crandn(rng, 1)[0]
        xyz = [gen.modulus_between(rng, 0.5, 2.0) for _ in range(3)]
        xyz[k % 3] = 0
        A = gen.rotate(rng, gen.triangular3(lam, *xyz))
        st = oracle(A, "c7 xyz=0")
        worst_zero = max(worst_zero, abs(st - lam) / scale_of(A))
    for _ in range(50):
        lam = gen.crandn(rng, 1)[0]
        xyz = [gen.modulus_between(rng, 0.5, 2.0) for _ in range(3)]
        A = gen.rotate(rng, gen.triangular3(lam, *xyz))
        st = oracle(A, "c7 xyz!=0")
        closest_nonzero = min(closest_nonzero, abs(st - lam) / scale_of(A))
    ok = worst_zero <= 1e-6 and closest_nonzero >= 1e-3
    return ok, f"xyz=0: max |St-lam|/scale={worst_zero:.2e}; xyz!=0: min |St-lam|/scale={closest_nonzero:.3e}"


def _doubleton(rng, mu, lam, x, y, z):
    return gen.rotate(rng, gen.triangular3(mu, x, y, z, mu=lam))


def criterion_08():
    rng = np.random.default_rng(8)
    mismatches, true_count, total = 0, 0, 0

    def judge(A, mu):
        nonlocal mismatches, true_count, total
        verdict = multiple_eig_st_criterion(A)
        st = oracle(A, "c8")
        actual = abs(st - mu) <= 1e-5 * scale_of(A)
        mismatches += verdict != actual
        true_count += verdict
        total += 1

    for _ in range(200):
        mu, lam = gen.crandn(rng, 2)
        x, y, z = gen.crandn(rng, 3)
        judge(_doubleton(rng, mu, lam, x, y, z), mu)
    for k in range(50):
        mu = gen.crandn(rng, 1)[0]
        rho = rng.uniform(0.2, 1.5)
        d = np.exp(2j * np.pi * rng.uniform())
        lam = mu + rho * d
        v, w = rng.uniform(0.2, 2.0, size=2)
        u = gen.eqlm_u(rho, v, w)
        # sign condition holds when y (lam - mu) is a negative real
        phase = -np.conj(d) if k % 5 else np.exp(2j * np.pi * rng.uniform())
        x = u * np.exp(2j * np.pi * rng.uniform())
        z = w * np.exp(2j * np.pi * rng.uniform())
        # undo the phases of x and z so that conj(x) y conj(z) carries the chosen phase
        y = v * phase * (x / abs(x)) * (z / abs(z))
        judge(_doubleton(rng, mu, lam, x, y, z), mu)
    return mismatches == 0, f"{total - mismatches}/{total} verdicts match the oracle ({true_count} true)"


def criterion_09():
    rng = np.random.default_rng(9)
    worst_hull, min_interior = math.inf, math.inf
    for k in range(100):
        n = 3 + k % 3
        lams = gen.crandn(rng, n - 1)
        bs = rng.uniform(0.2, 2.0, size=n - 1)
        A = gen_almost_normal(lams, bs, gen.crandn(rng, 1)[0])
        st = oracle(A, "c9")
        d = hull_distance(st, np.diag(A))
        worst_hull = min(worst_hull, d / scale_of(A))
        min_interior = min(min_interior, d)
    ok = worst_hull >= -1e-6 and min_interior > 0
    return ok, f"min signed hull distance = {min_interior:.3e} (scaled {worst_hull:.3e})"


def criterion_11():
    A = corpus_matrix("arbera")
    I = np.eye(3)
    plus, minus = operator_norm(A + I), operator_norm(A - I)
    rep = roberts_numeric(A)
    st = record("c11", A, rep.stampfli_point)
    checks = [abs(plus - 2.1617) <= 5e-4, abs(minus - 2.1366) <= 5e-4, not rep.orthogonal, abs(st - 0.0203) <= 5e-4]
    return all(checks), f"||A+I||={plus:.5f} ||A-I||={minus:.5f} orthogonal={rep.orthogonal} St={st.real:.5f}"


def criterion_12():
    rng = np.random.default_rng(12)
    cases = []
    for _ in range(20):
        n1, n2 = rng.integers(1, 4, size=2)
        cases.append(("nilpotent_quadratic", gen.rotate(rng, gen.quadratic(rng, n1, n2, 0, 0))))
    for _ in range(20):
        n1, n2 = rng.integers(1, 4, size=2)
        a = gen.crandn(rng, 1)[0]
        cases.append(("scaled_involution", gen.rotate(rng, gen.quadratic(rng, n1, n2, a, -a))))
    for k in range(10):
        xyz = [gen.modulus_between(rng, 0.5, 2.0) for _ in range(3)]
        xyz[k % 3] = 0
        cases.append(("nilpotent3_circular", gen.rotate(rng, gen.triangular3(0, *xyz))))
    for _ in range(10):
        x = gen.modulus_between(rng, 0.5, 2.0)
        lam = rng.uniform(0, 0.5) * abs(x) * np.exp(2j * np.pi * rng.uniform())
        A = np.zeros((3, 3), complex)
        A[0, 0], A[1, 2] = lam, x
        cases.append(("reducible", gen.rotate(rng, A)))
    failures, worst_asym, worst_st = [], 0.0, 0.0
    for kind, A in cases:
        rep = roberts_numeric(A)
        st = record(f"c12 {kind}", A, rep.stampfli_point)
        worst_asym = max(worst_asym, rep.max_asymmetry)
        worst_st = max(worst_st, abs(st) / operator_norm(A))
        if not rep.orthogonal or abs(st) > 1e-6 * operator_norm(A):
            failures.append(kind)
    return not failures, f"{len(cases) - len(failures)}/{len(cases)} pass; max asymmetry={worst_asym:.2e} max |St|/||A||={worst_st:.2e}"


def criterion_13():
    references = {"fig1": (0j, 1e-6), "fig2": (-1.008 + 0.0237j, 5e-3), "fig4": (-0.9363 + 0.5225j, 5e-3)}
    parts, ok = [], True
    for name, (target, tol) in references.items():
        A = corpus_matrix(name)
        res = st_dispatch(A)
        record(f"c13 {name}", A, res.point, res.certificate_margin)
        d = abs(res.point - target)
        ok &= d <= tol
        parts.append(f"{name} diff={d:.2e}{'' if d <= tol else ' FAIL'}")
    A = corpus_matrix("fig3")
    res = st_dispatch(A)
    record("c13 fig3", A, res.point, res.certificate_margin)
    ref = stampfli_oracle(A, tol=1e-12)
    record("c13 fig3 oracle", A, ref.point, ref.certificate_margin)
    d_cap = abs(res.point - (-0.0145 - 1.2143j))
    d_ref = abs(res.point - ref.point)
    ok &= d_cap <= 5e-2 and d_ref <= 1e-6
    parts.append(f"fig3 reference diff={d_cap:.2e} oracle diff={d_ref:.2e}")
    return bool(ok), "; ".join(parts)


def criterion_14():
    rng = np.random.default_rng(14)
    worst = 0.0
    for k in range(100):
        n = 2 + k % 3
        if k % 4 == 0 and n == 3:
            A = gen.triangular3(gen.crandn(rng, 1)[0], *gen.crandn(rng, 3))
        elif k % 4 == 1:
            A = gen.quadratic(rng, 1, n - 1, *gen.crandn(rng, 2))
        else:
            A = gen.crandn(rng, n, n)
        alpha = gen.modulus_between(rng, 0.3, 3.0)
        beta = gen.crandn(rng, 1)[0]
        B = alpha * A + beta * np.eye(n)
        C = gen.rotate(rng, A)
        for solve in (lambda M: stampfli_oracle(M), st_dispatch):
            s_a, s_b, s_c = (solve(M) for M in (A, B, C))
            for M, r in ((A, s_a), (B, s_b), (C, s_c)):
                record("c14 equivariance", M, r.point, r.certificate_margin)
            scale = 1.0 + max(operator_norm(A), operator_norm(B))
            err = max(abs(s_b.point - (alpha * s_a.point + beta)), abs(s_c.point - s_a.point)) / scale
            worst = max(worst, err)
    even = 0
    for _ in range(200):
        u, v, w = rng.uniform(0.1, 10.0, size=3)
        even += len(positive_roots(build_PA(u, v, w))) % 2 == 0
    worst_res = 0.0
    for _ in range(100):
        u, v, w = rng.uniform(0.1, 10.0, size=3)
        for s in positive_roots(build_PA(u, v, w)):
            M = resultant_matrix(u / s, -v / s, w / s)
            hadamard = np.prod(np.linalg.norm(M, axis=1))
            worst_res = max(worst_res, abs(resultant_res(u / s, -v / s, w / s)) / hadamard)
    ok = worst <= 1e-6 and even == 0 and worst_res <= 1e-6
    return ok, f"equivariance err={worst:.2e}; even root counts={even}/200; resultant residual={worst_res:.2e}"


def criterion_10():
    worst, label = math.inf, None
    for lab, A, point, margin in COMPUTED:
        if margin is None:
            margin = certificate_margin(A, point)
        m = margin / scale_of(A)
        if m < worst:
            worst, label = m, lab
    return worst >= -1e-6, f"{len(COMPUTED)} points; min margin/(1+||A||)={worst:.2e} ({label})"


CRITERIA = [
    (1, criterion_01), (2, criterion_02), (3, criterion_03), (4, criterion_04), (5, criterion_05),
    (6, criterion_06), (7, criterion_07), (8, criterion_08), (9, criterion_09), (11, criterion_11),
    (12, criterion_12), (13, criterion_13), (14, criterion_14), (10, criterion_10),
]


def run(number, func):
    ok, detail = func()
    RESULTS[number] = (bool(ok), detail)
    return ok, detail


@pytest.mark.parametrize("number,func", CRITERIA, ids=[f"criterion_{n:02d}" for n, _ in CRITERIA])
def test_criterion(number, func):
    ok, detail = run(number, func)
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for number, func in CRITERIA:
        ok, detail = run(number, func)
        failed += not ok
        print(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}", flush=True)
    sys.exit(1 if failed else 0)
