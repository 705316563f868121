"""Command-line interface.

Subcommands::

    stampfli st FILE...          Stampfli point records (JSON lines)
    stampfli nr FILE             numerical range boundary table
    stampfli w0 FILE --shift=a,b maximal numerical range of A - (a+bi)I
    stampfli roberts FILE        Roberts orthogonality report
    stampfli verify FILE... | --suite
    stampfli figures --out DIR   appendix figure datasets

Exit status: 0 success, 1 a verify check failed, 2 malformed input or I/O
error, 3 an optimizer did not converge.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import os
import sys
import time

import numpy as np

from . import io
from .closedform import st_dispatch, try_closed_form
from .errors import ConvergenceError, InputError
from .hull import hull_vertices
from .matcore import eigenvalues, operator_norm
from .numrange import DEFAULT_SAMPLES, compress_to_top, contains_zero, nr_boundary
from .oracle import CERT_TOL, DEFAULT_TOL, Method, stampfli_oracle
from .roberts import roberts_numeric

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_CONVERGENCE = 0, 1, 2, 3
AGREE_TOL = 1e-6
FIGURES = ("fig1", "fig2", "fig3", "fig4")


@contextlib.contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _parse_shift(text):
    try:
        re_, im_ = (float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"shift must be 're,im', got {text!r}") from None
    return complex(re_, im_)


def compute_st(A, method="auto", tol=DEFAULT_TOL):
    if method == "oracle":
        return stampfli_oracle(A, tol)
    if method == "closed":
        res = try_closed_form(A, tol)
        if res is None:
            raise InputError("no closed form applies to this matrix")
        return res
    return st_dispatch(A, tol)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_st(args):
    with _output(args.out) as out:
        for path in args.paths:
            A = io.read_matrix(path)
            t0 = time.perf_counter()
            res = compute_st(A, args.method, args.tol)
            elapsed = 0.0 if args.no_timing else 1e3 * (time.perf_counter() - t0)
            rec = io.ResultRecord(
                input_path=path, st_point=io.pair(res.point), min_norm=res.min_norm,
                method=str(res.method), certificate_margin=res.certificate_margin,
                spectrum=[io.pair(z) for z in eigenvalues(A)], elapsed_ms=elapsed)
            out.write(rec.to_json() + "\n")
    return EXIT_OK


def boundary_rows(A, K, st, hull=False):
    region = nr_boundary(A, K)
    rows = ["theta,re,im"]
    rows += [f"{io.fmt(t)},{io.fmt(z.real)},{io.fmt(z.imag)}"
             for t, z in zip(region.angles, region.witness_points)]
    eigs = eigenvalues(A)
    rows += [f"eig,{io.fmt(z.real)},{io.fmt(z.imag)}" for z in eigs]
    rows.append(f"st,{io.fmt(st.real)},{io.fmt(st.imag)}")
    if hull:
        rows += [f"hull,{io.fmt(z.real)},{io.fmt(z.imag)}" for z in hull_vertices(eigs)]
    return rows


def cmd_nr(args):
    A = io.read_matrix(args.path)
    st = st_dispatch(A, args.tol).point
    with _output(args.out) as out:
        out.write("\n".join(boundary_rows(A, args.samples, st, hull=args.hull)) + "\n")
    return EXIT_OK


def cmd_w0(args):
    A = io.read_matrix(args.path)
    M = A - args.shift * np.eye(A.shape[0])
    rows = ["theta,support,re,im"]
    if not np.any(M):
        # W0 of the zero matrix is {0}
        margin = 0.0
        rows += [f"{io.fmt(2 * np.pi * k / args.samples)},0,0,0" for k in range(args.samples)]
    else:
        region = nr_boundary(compress_to_top(M).B, args.samples)
        _, margin = contains_zero(region)
        rows += [f"{io.fmt(t)},{io.fmt(h)},{io.fmt(z.real)},{io.fmt(z.imag)}"
                 for t, h, z in zip(region.angles, region.support, region.witness_points)]
    member = margin >= -CERT_TOL * (1.0 + operator_norm(A))
    rows.append(f"margin,{io.fmt(margin)}")
    rows.append(f"member,{str(member).lower()}")
    with _output(args.out) as out:
        out.write("\n".join(rows) + "\n")
    return EXIT_OK


def cmd_roberts(args):
    A = io.read_matrix(args.path)
    rep = roberts_numeric(A)
    doc = {
        "input_path": args.path,
        "orthogonal": rep.orthogonal,
        "max_asymmetry": rep.max_asymmetry,
        "worst_nu": io.pair(rep.worst_nu),
        "stampfli_zero": rep.stampfli_zero,
        "stampfli_point": io.pair(rep.stampfli_point),
        "classification": str(rep.classification),
    }
    with _output(args.out) as out:
        out.write(json.dumps(doc) + "\n")
    return EXIT_OK


def verify_matrix(name, A, expected=None, tol=DEFAULT_TOL):
    """Checks for one matrix as ``(name, check, passed, detail)`` rows."""
    expected = expected or {}
    res = st_dispatch(A, tol)
    norm = operator_norm(A)
    scale = 1.0 + norm
    rows = []
    rows.append((name, "certificate", res.certificate_margin >= -CERT_TOL * scale,
                 f"margin={io.fmt(res.certificate_margin)}"))
    if res.method is not Method.ORACLE:
        ref = stampfli_oracle(A, tol)
        d = abs(res.point - ref.point)
        rows.append((name, "oracle_agreement", d <= AGREE_TOL * scale, f"method={res.method} diff={io.fmt(d)}"))
    if "st" in expected:
        target = complex(*expected["st"])
        d = abs(res.point - target)
        rows.append((name, "expected_point", d <= expected.get("atol", AGREE_TOL) * scale,
                     f"diff={io.fmt(d)}"))
    if "method" in expected:
        rows.append((name, "expected_method", str(res.method) == expected["method"], f"method={res.method}"))
    if "roots" in res.details:
        roots = res.details["roots"]
        detail = f"roots={len(roots)} selected_index={res.details.get('selected_index')}"
        ok = True
        if "roots" in expected:
            ok = len(roots) == expected["roots"]
        if "selected_index" in expected:
            ok = ok and res.details.get("selected_index") == expected["selected_index"]
        rows.append((name, "quintic_roots", ok, detail))
    return rows


def verify_two_by_two_batch(count=100, seed=0, tol=DEFAULT_TOL):
    rng = np.random.default_rng(seed)
    agree = 0
    for _ in range(count):
        A = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        ref = stampfli_oracle(A, tol)
        if abs(ref.point - np.trace(A) / 2) <= AGREE_TOL * (1.0 + operator_norm(A)):
            agree += 1
    return ("random_2x2", "trace_half", agree == count, f"{agree}/{count}")


def cmd_verify(args):
    if not args.suite and not args.paths:
        raise InputError("give matrix files or --suite")
    rows = []
    if args.suite:
        for name in io.corpus_names():
            doc = io.corpus_document(name)
            rows += verify_matrix(name, io.matrix_from_doc(doc), doc.get("expected"), args.tol)
        rows.append(verify_two_by_two_batch(tol=args.tol))
    for path in args.paths:
        doc = io.read_document(path)
        rows += verify_matrix(path, io.matrix_from_doc(doc), doc.get("expected"), args.tol)
    failed = sum(1 for r in rows if not r[2])
    with _output(args.out) as out:
        out.write("name,check,status,detail\n")
        for name, check, ok, detail in rows:
            out.write(f"{name},{check},{'PASS' if ok else 'FAIL'},{detail}\n")
        out.write(f"# {len(rows) - failed}/{len(rows)} checks passed\n")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def figure_dataset(name, K=DEFAULT_SAMPLES, tol=DEFAULT_TOL):
    A = io.corpus_matrix(name)
    st = st_dispatch(A, tol).point
    return boundary_rows(A, K, st, hull=True)


def cmd_figures(args):
    outdir = args.out or "."
    os.makedirs(outdir, exist_ok=True)
    for name in FIGURES:
        rows = figure_dataset(name, args.samples, args.tol)
        with open(os.path.join(outdir, f"{name}.csv"), "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(rows) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_globals(p, defaults):
    kw = (lambda v: {"default": v}) if defaults else (lambda v: {"default": argparse.SUPPRESS})
    p.add_argument("--tol", type=float, help="optimizer tolerance (default 1e-9)", **kw(DEFAULT_TOL))
    p.add_argument("--samples", type=int, help="support angles (default 720)", **kw(DEFAULT_SAMPLES))
    p.add_argument("--out", help="output file (directory for 'figures')", **kw(None))
    p.add_argument("-v", "--verbose", action="store_true", **kw(False))


def build_parser():
    parser = argparse.ArgumentParser(prog="stampfli", description="Stampfli points of complex matrices.")
    _add_globals(parser, True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("st", help="Stampfli point of each matrix file")
    p.add_argument("paths", nargs="+")
    p.add_argument("--method", choices=["auto", "oracle", "closed"], default="auto")
    p.add_argument("--no-timing", action="store_true", help="write elapsed_ms as 0 for reproducible output")
    p.set_defaults(func=cmd_st)

    p = sub.add_parser("nr", help="numerical range boundary, spectrum and Stampfli point")
    p.add_argument("path")
    p.add_argument("--hull", action="store_true", help="append convex hull vertices of the spectrum")
    p.set_defaults(func=cmd_nr)

    p = sub.add_parser("w0", help="maximal numerical range of A - shift*I and the zero margin")
    p.add_argument("path")
    p.add_argument("--shift", type=_parse_shift, default=0j, help="'re,im'; write --shift=-1,0 for negatives")
    p.set_defaults(func=cmd_w0)

    p = sub.add_parser("roberts", help="Roberts orthogonality to the identity")
    p.add_argument("path")
    p.set_defaults(func=cmd_roberts)

    p = sub.add_parser("verify", help="closed form, oracle and certificate cross-checks")
    p.add_argument("paths", nargs="*")
    p.add_argument("--suite", action="store_true", help="run the shipped corpus")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figures", help="write the four figure datasets to --out")
    p.set_defaults(func=cmd_figures)

    for p in sub.choices.values():
        _add_globals(p, False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.samples < 16:
            raise InputError("--samples must be at least 16")
        return args.func(args)
    except ConvergenceError as exc:
        print(f"stampfli: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (ValueError, OSError) as exc:
        print(f"stampfli: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
