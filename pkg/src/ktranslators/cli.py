"""ktranslators command line.

Exit status: 0 success, 2 inadmissible parameters or bad input,
3 numerical failure, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import export
from .errors import TranslatorError
from .gluer import DELTAS, glue_pair
from .golden import golden_closed_form
from .profiles import make_profile
from .surface import Family
from .validator import GridSpec, UserCurve, validate_grid

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_IO = 0, 2, 3, 4


def _window(text: str | None):
    if text is None:
        return None
    try:
        a, b = (float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'lo,hi', got {text!r}")
    return (a, b)


def _profile_args(p: argparse.ArgumentParser, family_required: bool = True):
    p.add_argument("--family", required=family_required, type=Family.parse,
                   help="TA-S, TA-T, SA-S, SA-T1, SA-T2, LA-S or LA-T")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--m", type=float, required=family_required)
    p.add_argument("--sign", choices=["+", "-"], default="+")
    p.add_argument("--r-ref", type=float, default=None, help="anchor with f(r_ref) = 0")


def _out_arg(p):
    p.add_argument("--out", type=Path, default=None, help="output file (stdout if omitted)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ktranslators", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="domain, case and endpoint behaviour of a profile")
    _profile_args(p)
    _out_arg(p)

    p = sub.add_parser("sample", help="sample the generating curve to CSV")
    _profile_args(p)
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--inset", type=float, default=None)
    p.add_argument("--r-window", type=_window, default=None, metavar="LO,HI")
    _out_arg(p)

    p = sub.add_parser("mesh", help="surface mesh to OBJ plus a per-vertex CSV")
    _profile_args(p)
    p.add_argument("--n", type=int, default=40)
    p.add_argument("--n-theta", type=int, default=16)
    p.add_argument("--inset", type=float, default=None)
    p.add_argument("--r-window", type=_window, default=None, metavar="LO,HI")
    p.add_argument("--theta-window", type=_window, default=None, metavar="LO,HI")
    p.add_argument("--out", type=Path, required=True, help="OBJ path; the CSV goes next to it")

    p = sub.add_parser("validate", help="residual of K^alpha = <N, v> on a grid, as JSON")
    _profile_args(p, family_required=False)
    p.add_argument("--table", type=Path, default=None, help="CSV with r,f columns instead of --m")
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--n-theta", type=int, default=16)
    p.add_argument("--inset", type=float, default=0.1)
    p.add_argument("--r-window", type=_window, default=None, metavar="LO,HI")
    p.add_argument("--theta-window", type=_window, default=None, metavar="LO,HI")
    p.add_argument("--curvature", choices=["analytic", "fd"], default="analytic",
                   help="column judged against --tol (both are always reported)")
    p.add_argument("--fd-step", type=float, default=None)
    p.add_argument("--tol", type=float, default=None, help="fail with status 3 above this residual")
    _out_arg(p)

    p = sub.add_parser("glue", help="join a timelike profile to its reverse-signed spacelike partner")
    p.add_argument("--pair", choices=["TA", "SA", "LA"], required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--m", type=float, required=True, help="timelike constant m_t > 0")
    p.add_argument("--m-right", type=float, default=None, help="spacelike constant (default -m)")
    p.add_argument("--sign", choices=["+", "-"], default="+")
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--tol", type=float, default=1e-10)
    _out_arg(p)
    return ap


def _emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, newline="")


def _profile(a):
    return make_profile(a.family, a.alpha, a.m, a.sign, a.r_ref)


def cmd_profile(a) -> int:
    prof = _profile(a)
    lo, hi = prof.domain
    golden = golden_closed_form(prof.family, prof.alpha, prof.m, prof.sign, prof.r_ref)
    print(f"family:     {prof.family.value} ({prof.family.describe()})")
    print(f"alpha:      {prof.alpha!r}")
    print(f"m:          {prof.m!r}")
    print(f"sign:       {prof.sign}")
    print(f"case:       {prof.case.label}")
    print(f"domain:     ({export.fmt(lo)}, {export.fmt(hi)})")
    print(f"left end:   {prof.case.left.value}")
    print(f"right end:  {prof.case.right.value}")
    print(f"r_ref:      {prof.r_ref!r}")
    print(f"golden:     {golden.form.name if golden else 'none'}")
    if a.out is not None:
        a.out.write_text(export.dumps(prof.descriptor()) + "\n")
    return EXIT_OK


def cmd_sample(a) -> int:
    curve = export.sample_curve(_profile(a), a.n, a.inset, a.r_window)
    _emit(curve.to_csv(), a.out)
    return EXIT_OK


def cmd_mesh(a) -> int:
    prof = _profile(a)
    inset = a.inset if a.inset is not None else (0.0 if a.r_window else 0.1)
    grid = GridSpec(a.n, a.n_theta, inset, a.r_window, a.theta_window)
    mesh = export.build_mesh(prof, grid)
    a.out.write_text(mesh.to_obj(), newline="")
    side = a.out.with_suffix(".csv")
    side.write_text(mesh.sidecar_csv(), newline="")
    print(f"wrote {len(mesh.vertices)} vertices, {len(mesh.faces)} quads to {a.out} and {side}")
    return EXIT_OK


def _table_curve(a):
    if a.family is None:
        raise ValueError("--table needs --family")
    cols = export.read_csv(a.table.read_text())
    if "r" not in cols or "f" not in cols:
        raise ValueError("table must have r and f columns")
    return UserCurve.from_table(a.family, a.alpha, cols["r"], cols["f"], label=str(a.table))


def cmd_validate(a) -> int:
    if a.table is not None:
        curve = _table_curve(a)
    else:
        if a.family is None or a.m is None:
            raise ValueError("validate needs --family and --m, or --table")
        curve = _profile(a)
    grid = GridSpec(a.n, a.n_theta, a.inset, a.r_window, a.theta_window, a.fd_step)
    rep = validate_grid(curve, grid)
    d = rep.to_dict()
    d["curvature"] = a.curvature
    sup = rep.sup_residual_analytic if a.curvature == "analytic" else rep.sup_residual_fd
    if a.tol is not None:
        d["tol"] = a.tol
        d["pass"] = bool(sup <= a.tol)
    _emit(export.dumps(d) + "\n", a.out)
    if a.tol is not None and not sup <= a.tol:
        print(f"residual {sup!r} exceeds tol {a.tol!r}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def cmd_glue(a) -> int:
    g = glue_pair(a.pair, a.alpha, a.m, a.m_right, a.sign, a.tol)
    diag = g.diagnostics(DELTAS)
    lo, hi = g.domain
    print(f"pair:      {g.pair} ({g.left.family.value} on the left, {g.right.family.value} on the right)", file=sys.stderr)
    print(f"junction:  r_j = {g.r_j!r}", file=sys.stderr)
    print(f"domain:    ({export.fmt(lo)}, {export.fmt(hi)})", file=sys.stderr)
    for row in diag["one_sided"]:
        print(f"delta={row['delta']:g}  |f_left - f_right| = {row['continuity']:.3e}  "
              f"f'_left = {row['fprime_left']:.9g}  f'_right = {row['fprime_right']:.9g}", file=sys.stderr)
    _emit(export.glue_csv(g.sample(a.n)), a.out)
    return EXIT_OK


COMMANDS = {"profile": cmd_profile, "sample": cmd_sample, "mesh": cmd_mesh,
            "validate": cmd_validate, "glue": cmd_glue}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (ArithmeticError, TranslatorError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
