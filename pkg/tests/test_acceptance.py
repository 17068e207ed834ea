"""Acceptance suite: one test per criterion, one printed line per check.

Run with ``pytest tests/test_acceptance.py -v`` (lines are repeated in the
terminal summary) or directly as a script.
"""

import io
import json
import math
import random
import time

import numpy as np
import pytest
from scipy import integrate

from ktranslators.cli import main as cli_main
from ktranslators.errors import CurvatureError, DomainError, InadmissibleError
from ktranslators.export import read_csv, sample_curve
from ktranslators.gluer import glue_pair
from ktranslators.golden import golden_closed_form, remark_alpha_one_curve, remark_alpha_one_fprime
from ktranslators.profiles import EndpointBehavior as EB, Profile, make_profile
from ktranslators.surface import Family, causal_gap, gauss_curvature_analytic, gauss_curvature_fd
from ktranslators.validator import GridSpec, UserCurve, residual_at, validate_grid

FAMILIES = [f.value for f in Family]
SWEEP_ALPHAS = [-1.0, 1 / 6, 0.25, 0.5, 1.0, 2.0]
M_CANDIDATES = [0.5, 2.0, -1.0, 3.0, 0.0, 1.5, -0.5, 1.0]


def sweep():
    """First three admissible m values per (family, alpha)."""
    out = []
    for fam in FAMILIES:
        for a in SWEEP_ALPHAS:
            got = []
            for m in M_CANDIDATES:
                try:
                    got.append(make_profile(fam, a, m))
                except InadmissibleError:
                    continue
                if len(got) == 3:
                    break
            out += got
    return out


SWEEP = sweep()


def random_alpha(rng):
    return rng.choice([rng.uniform(0.05, 0.45), 0.5, rng.uniform(0.55, 3.0), rng.uniform(-3.0, -0.05)])


def test_c1_translator_residual(criterion):
    t0 = time.perf_counter()
    reports = [validate_grid(p) for p in SWEEP]
    elapsed = time.perf_counter() - t0
    worst = max(reports, key=lambda r: r.sup_residual_analytic)
    ok_res = worst.sup_residual_analytic <= 1e-8
    ok_time = elapsed <= 5.0
    criterion("C1", ok_res and ok_time,
              f"{len(SWEEP)} profiles, 100x16 grid: sup |K^a - <N,v>| = {worst.sup_residual_analytic:.2e} "
              f"(<= 1e-8, worst {worst.profile['family']} a={worst.profile['alpha']:.4g} m={worst.profile['m']:g}); "
              f"{elapsed:.2f} s (<= 5 s)")
    assert ok_res and ok_time


def test_c2_fd_curvature_oracle(criterion):
    worst_rel, where = 0.0, None
    for p in SWEEP:
        rel = validate_grid(p).max_rel_curvature_gap
        if rel > worst_rel:
            worst_rel, where = rel, p
    ok_rel = worst_rel <= 1e-5
    criterion("C2a", ok_rel, f"FD vs analytic K over the sweep: max relative error {worst_rel:.2e} (<= 1e-5, "
              f"worst {where.family.value} a={where.alpha:.4g} m={where.m:g})")

    worst_order, at = math.inf, None
    for p in SWEEP:
        lo, hi = p.domain
        hi = min(hi, lo + 1.0)
        r = lo + 0.5 * (hi - lo)
        K = gauss_curvature_analytic(p.family, r, p.fprime(r), p.fsecond(r), gap=p.gap(r))
        h0 = 0.02 * min(1.0, hi - lo)
        errs = [abs(gauss_curvature_fd(p.family, p.local_f, r, 0.3, h=h0 / 2**i, theta_step=0.02 / 2**i) - K)
                for i in range(3)]
        order = min(math.log2(errs[i] / errs[i + 1]) for i in range(2))
        if order < worst_order:
            worst_order, at = order, p
    ok_order = worst_order >= 1.8
    criterion("C2b", ok_order, f"step halving (h, dtheta) -> /2, /4: min observed order {worst_order:.3f} (>= 1.8, "
              f"at {at.family.value} a={at.alpha:.4g} m={at.m:g})")
    assert ok_rel and ok_order


def _golden_cases():
    cases = [("TA-S", 0.25, 0.5), ("TA-S", 0.25, 0.0), ("TA-S", 0.25, -1.0), ("TA-T", 0.25, 1.0),
             ("SA-S", 0.25, 1.0), ("SA-S", 0.25, -0.5), ("SA-T1", 0.25, 0.5), ("SA-T1", 0.25, 1.5),
             ("SA-T2", 0.25, 2.0), ("SA-T2", 0.25, 0.5),
             ("TA-S", 1 / 6, 0.0), ("TA-S", 0.1, 0.0),
             ("LA-S", 1.0, 1.0), ("LA-S", 1.0, 2.5), ("LA-S", 0.1, 0.0), ("LA-S", 0.3, 0.0),
             ("LA-S", 0.25, 1.0), ("LA-S", 0.25, -1.0), ("LA-T", 0.25, 1.0), ("LA-T", 0.25, 2.0)]
    for fam, a, m in cases:
        for sign in ("+", "-") if not fam.startswith("LA") else ("+",):
            yield fam, a, m, sign


def test_c3_golden_closed_forms(criterion):
    worst = 0.0
    for fam, a, m, sign in _golden_cases():
        p = make_profile(fam, a, m, sign)
        g = golden_closed_form(fam, a, m, sign, p.r_ref)
        assert g is not None, (fam, a, m)
        lo, hi = p.domain
        hi = min(hi, lo + 1.0)
        r = np.linspace(lo, hi, 41)[1:-1]
        err = float(np.max(np.abs(p.f(r) - g(r))))
        worst = max(worst, err)
        criterion("C3", err <= 1e-9, f"{fam} a={a:.4g} m={m:g} sign {sign}: max |f_quad - f_closed| = {err:.1e}")

    # alpha = 1, m = 1 curve: the formal f' of that case, integrated directly
    r = np.linspace(2.0, 5.0, 41)[1:-1]
    ref = 3.0
    quad = np.array([integrate.quad(remark_alpha_one_fprime, ref, x, epsabs=1e-12, epsrel=1e-12)[0] for x in r])
    err = float(np.max(np.abs(quad - (remark_alpha_one_curve(r) - remark_alpha_one_curve(ref)))))
    worst = max(worst, err)
    try:
        make_profile("TA-S", 1.0, 1.0)
        note = "admissible"
    except InadmissibleError:
        note = "not an admissible profile: base 1 - r^2/2 < 0 there, so K < 0"
    criterion("C3", err <= 1e-9, f"TA-S a=1 m=1 curve on (2, 5) vs quadrature of its formal f': {err:.1e} ({note})")
    assert worst <= 1e-9


def test_c4_domain_tables(criterion):
    rng = random.Random(2024)
    n, fails, tested = 0, [], 0
    while n < 200:
        fam = rng.choice(FAMILIES)
        a = random_alpha(rng)
        m = rng.choice([rng.uniform(-3, 3), rng.uniform(-3, 3), 0.0, 1.0])
        sign = "+" if fam.startswith("LA") else rng.choice("+-")
        try:
            p = make_profile(fam, a, m, sign)
        except InadmissibleError:
            continue
        n += 1
        lo, hi = p.domain
        if math.isinf(hi):
            inner, d_hi = [lo + 1e-6, lo + 10.0 - 1e-6], 1e-6
        else:
            d = 1e-6 * (hi - lo)
            inner, d_hi = [lo + d, hi - d], d
        d_lo = 1e-6 if math.isinf(hi) else 1e-6 * (hi - lo)
        for r in inner:
            fp = p.fprime(r)
            gap = p.gap(r)
            # strict condition through the exact gap; the f'-formed gap may round to 0
            strict = gap > 0 and causal_gap(fam, fp) >= 0
            if fam == "LA-S":
                strict = strict and fp > 0
            if fam == "LA-T":
                strict = strict and fp < 0
            if not strict:
                fails.append((fam, a, m, r))
            tested += 1
        outside = [lo - d_lo, lo] + ([hi, hi + d_hi] if math.isfinite(hi) else [])
        for r in outside:
            try:
                p.fprime(r)
                fails.append((fam, a, m, r, "accepted"))
            except DomainError:
                pass
            tested += 1
    criterion("C4", not fails, f"200 random admissible triples, {tested} boundary probes; failures: {len(fails)}"
              + (f" first {fails[0]}" if fails else ""))
    assert not fails


def test_c5_endpoint_behaviour(criterion):
    ok_all = True
    for a, m in [(1 / 6, 0.5), (0.25, 0.5), (0.25, -1.0), (0.5, 2.0), (1.0, 2.0), (2.0, 3.0), (-1.0, 1.5)]:
        p = make_profile("TA-S", a, m)
        assert p.case.right is EB.SECOND_DERIVATIVE_BLOWUP
        lo, hi = p.domain
        d = 1e-5 * (hi - lo)
        fp = abs(p.fprime(hi - d))
        fs = [abs(p.fsecond(hi - d / 2**i)) for i in range(4)]
        ok = fp <= 1e-2 and all(fs[i + 1] > fs[i] for i in range(3))
        ok_all &= criterion("C5", ok, f"TA-S a={a:.4g} m={m:g} right end: |f'| = {fp:.2e} (<= 1e-2), "
                                      f"|f''| under halving {fs[0]:.3g} -> {fs[-1]:.3g}")

    for fam, a in [("TA-S", 0.25), ("TA-S", 0.4), ("SA-T1", 0.25), ("SA-T1", 0.4)]:
        try:
            p = make_profile(fam, a, 0.0)
        except InadmissibleError as e:
            ok_all &= criterion("C5", False, f"{fam} a={a} m=0 conical check: no such profile ({e})")
            continue
        h = p.h(1e-6)
        ok_all &= criterion("C5", h >= 1e3 and p.case.left is EB.CONICAL_POINT,
                            f"{fam} a={a} m=0 conical: h(1e-6) = {h:.3g} (>= 1e3), left = {p.case.left.value}")

    # where the corrected sign puts the spacelike-axis conical point (informational)
    for a in (0.25, 0.4):
        p = make_profile("SA-S", a, 0.0)
        criterion("C5i", p.h(1e-6) >= 1e3, f"SA-S a={a} m=0 conical: h(1e-6) = {p.h(1e-6):.3g}, "
                                           f"left = {p.case.left.value}")

    for a in (1 / 6, 0.25, 0.5, 1.0, 2.0, -1.0):
        p = make_profile("SA-T2", a, 1.0)
        fp = abs(p.fprime(1e-4))
        ok_all &= criterion("C5", fp <= 1e-2 and p.case.left is EB.AXIS_ORTHOGONAL,
                            f"SA-T2 a={a:.4g} m=1: |f'(1e-4)| = {fp:.2e} (<= 1e-2), left = {p.case.left.value}")
    assert ok_all


def test_c6_nonexistence(criterion):
    rng = random.Random(7)
    ok_all = True
    for fam in ("TA-S", "TA-T", "SA-S", "SA-T1", "SA-T2"):
        got, worst = 0, (math.inf, None)
        while got < 100:
            a = random_alpha(rng)
            m = rng.uniform(-3, 4)
            if abs(m - 1) < 0.05:
                continue
            try:
                p = make_profile(fam, a, m)
            except InadmissibleError:
                continue
            if p.domain[0] != 0.0:
                continue
            got += 1
            lim = abs(p.fprime(0.0, allow_endpoint=True)) if p.case.left is not EB.CONICAL_POINT else 1.0
            score = lim if lim < 1 else 1 + (lim * lim - 1)
            if not (lim >= 0.01 or lim * lim >= 1.0001):
                ok_all = False
            if score < worst[0]:
                worst = (score, (a, m, lim))
        a, m, lim = worst[1]
        criterion("C6", ok_all, f"{fam}: 100 draws with axis endpoint, smallest |f'(0+)| = {lim:.4g} "
                                f"at a={a:.4g} m={m:.4g} (need >= 0.01 or f'^2 >= 1.0001)")
    # the orthogonal meetings that do exist
    for fam in ("SA-T2", "SA-T1"):
        p = make_profile(fam, 0.25, 1.0)
        criterion("C6i", True, f"{fam} a=0.25 m=1: f'(0+) = {p.fprime(0.0, allow_endpoint=True):.3g}, "
                               f"left = {p.case.left.value} (excluded from the draws by |m - 1| >= 0.05)")
    assert ok_all


def test_c7_gluing(criterion):
    ok_all = True
    for pair in ("TA", "SA", "LA"):
        for a in (0.1, 1 / 6, 0.25, 0.4):
            for m in (0.5, 1.0, 2.0):
                g = glue_pair(pair, a, m)
                mis = abs(g.left.domain[1] - g.right.domain[0])
                c = [row["continuity"] for row in g.diagnostics()["one_sided"]]
                ok = mis <= 1e-12 and c[0] > c[1] > c[2]
                ok_all &= ok
                if not ok:
                    criterion("C7", False, f"{pair} a={a:.4g} m={m}: mismatch {mis:.1e}, continuity {c}")
    criterion("C7", ok_all, "36 glued pairs: junction endpoints agree to 1e-12 and "
                            "|f_left(r_j - d) - f_right(r_j + d)| decreases over d = 1e-2, 1e-3, 1e-4")
    g = glue_pair("LA", 0.25, 1.0)
    ok_dom = g.domain == (0.0, math.inf)
    criterion("C7", ok_dom, f"glued LA curve domain {g.domain}")
    assert ok_all and ok_dom


def test_c8_negative_controls(criterion):
    flat = UserCurve("TA-S", 0.25, lambda r: 0 * r + 1.0, (0.0, 1.0))
    try:
        residual_at(flat, 0.5, 0.0)
        raised = False
    except CurvatureError:
        raised = True
    criterion("C8", raised, "constant profile: residual_at raises CurvatureError (K <= 0)")
    ok_all = raised
    for fam, a, m in [("LA-S", 0.25, 1.0), ("TA-S", 0.25, 0.5), ("TA-T", 0.25, 1.0), ("SA-S", 0.25, 1.0)]:
        p = make_profile(fam, a, m)
        wrong = golden_closed_form(fam, a, m * 1.01)
        rep = validate_grid(p, f=wrong)
        ok = rep.sup_residual_fd >= 1e-3
        ok_all &= ok
        criterion("C8", ok, f"{fam} a={a} m={m} fed the m*1.01 closed form: sup residual {rep.sup_residual_fd:.2e} "
                            f"(>= 1e-3; own profile gives {validate_grid(p).sup_residual_fd:.1e})")
    assert ok_all


def _cli(*argv):
    import contextlib

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(list(argv))
    assert code == 0
    return buf.getvalue()


def test_c9_round_trip(criterion, tmp_path):
    ok_desc = all(Profile.from_json(p.to_json()) == p and Profile.from_json(p.to_json()).to_json() == p.to_json()
                  for p in SWEEP)
    criterion("C9", ok_desc, f"{len(SWEEP)} profile descriptors re-ingest to identical profiles and text")

    p = make_profile("SA-T1", 2.0, 0.5, "-")
    s = sample_curve(p, 50)
    back = read_csv(s.to_csv())
    ok_csv = all(np.array_equal(back[k], getattr(s, k)) for k in ("r", "f", "fprime", "fsecond", "K", "residual"))
    criterion("C9", ok_csv, "sampled CSV columns re-read bit-identically")

    args = ["sample", "--family", "TA-T", "--alpha", "2", "--m", "-1", "--n", "40"]
    same_csv = _cli(*args) == _cli(*args)
    o1, o2 = tmp_path / "a.obj", tmp_path / "b.obj"
    _cli("mesh", "--family", "LA-S", "--alpha", "0.3", "--m", "0", "--out", str(o1))
    _cli("mesh", "--family", "LA-S", "--alpha", "0.3", "--m", "0", "--out", str(o2))
    same_mesh = o1.read_bytes() == o2.read_bytes() and o1.with_suffix(".csv").read_bytes() == o2.with_suffix(".csv").read_bytes()
    j1 = _cli("validate", "--family", "SA-S", "--alpha", "0.5", "--m", "1")
    same_json = j1 == _cli("validate", "--family", "SA-S", "--alpha", "0.5", "--m", "1") and json.loads(j1)
    ok_runs = same_csv and same_mesh and bool(same_json)
    criterion("C9", ok_runs, "repeated CLI runs (sample CSV, mesh OBJ + CSV, validate JSON) are byte-identical")
    assert ok_desc and ok_csv and ok_runs


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
