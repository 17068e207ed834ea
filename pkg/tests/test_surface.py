import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ktranslators.errors import DegenerateError, DomainError
from ktranslators.minkowski import lorentz_inner
from ktranslators.profiles import make_profile
from ktranslators.surface import (
    Family,
    chart_partials,
    gauss_curvature_analytic,
    gauss_curvature_fd,
    parametrize,
    speed_vector,
    surface_point,
    unit_normal,
)

SPACELIKE = [Family.TA_S, Family.SA_S, Family.LA_S]
# (family, a value of f' strictly inside the causal condition)
SAMPLE_FP = {
    Family.TA_S: 0.6, Family.TA_T: 1.7, Family.SA_S: 1.4, Family.SA_T1: 0.3,
    Family.SA_T2: 2.5, Family.LA_S: 0.8, Family.LA_T: -1.3,
}


def test_family_parse():
    assert Family.parse("sa-t1") is Family.SA_T1
    with pytest.raises(ValueError, match="expected one of"):
        Family.parse("XX")


@pytest.mark.parametrize(
    "family, f, r, t, expected",
    [("TA-S", 0, 1, 0, (1, 0, 0)), ("LA-S", 1, 1, 0, (0, 2, 0)), ("SA-S", 2, 1, 0, (2, 0, 1))],
)
def test_parametrize_examples(family, f, r, t, expected):
    assert parametrize(family, f, r, t) == expected


def test_parametrize_rejects_nonpositive_r():
    with pytest.raises(DomainError):
        parametrize("TA-S", 0, 0, 0)


def test_speed_vectors():
    assert speed_vector("TA-S") == (0, 0, 1)
    assert speed_vector("TA-T") == (0, 0, 1)
    assert speed_vector("SA-S") == (-1, 0, 0)
    assert speed_vector("SA-T1") == (-1, 0, 0)
    assert speed_vector("SA-T2") == (1, 0, 0)
    assert speed_vector("LA-T") == (0, -1, -1)


def test_normal_examples():
    n = unit_normal("TA-S", 0.0, 0.7, 1.1)
    assert n == pytest.approx((0, 0, -1))
    assert lorentz_inner(n, n) == pytest.approx(-1)
    n = unit_normal("LA-S", 1.0, 1.0, 0.0)
    assert n == pytest.approx((0, 0, 1))
    assert lorentz_inner(n, speed_vector("LA-S")) == pytest.approx(1)
    n = unit_normal("SA-S", math.sqrt(2), 1.0, 0.0)
    assert n == pytest.approx((-1, 0, -math.sqrt(2)))


def test_normal_degenerate():
    with pytest.raises(DegenerateError):
        unit_normal("TA-S", 1.0, 1.0, 0.0)
    with pytest.raises(DegenerateError):
        unit_normal("LA-T", 0.0, 1.0, 0.0)


@pytest.mark.parametrize("family", list(Family))
@given(r=st.floats(0.1, 3), t=st.floats(-2, 2))
@settings(max_examples=40, deadline=None)
def test_normal_frame(family, r, t):
    fp = SAMPLE_FP[family]
    n = unit_normal(family, fp, r, t)
    xr, xt = chart_partials(family, fp, r, t)
    assert lorentz_inner(n, n) == pytest.approx(-1 if family in SPACELIKE else 1, abs=1e-12)
    assert abs(lorentz_inner(n, xr)) < 1e-10
    assert abs(lorentz_inner(n, xt)) < 1e-10 * max(1, r * math.cosh(t) ** 2)
    sp = surface_point(family, 0.0, fp, r, t)
    assert (sp.discriminant > 0) == (family in SPACELIKE)


def test_normal_positive_pairing_for_translators():
    for family in Family:
        p = make_profile(family, 0.25, {"TA-S": 0.5, "TA-T": 1, "SA-S": 1, "SA-T1": 0.5,
                                         "SA-T2": 2, "LA-S": 1, "LA-T": 1}[family.value])
        r = p.r_ref
        n = unit_normal(family, p.fprime(r), r, 0.3)
        assert lorentz_inner(n, speed_vector(family)) > 0


def test_analytic_curvature_examples():
    assert gauss_curvature_analytic("LA-S", 1, 4, 8) == pytest.approx(1 / 16)
    assert gauss_curvature_analytic("TA-S", 1, 0.5, -0.75) == pytest.approx(2 / 3)
    assert gauss_curvature_analytic("SA-T2", 1, 1, 1) == pytest.approx(0.25)
    for family in Family:
        assert gauss_curvature_analytic(family, 1.0, SAMPLE_FP[family], 0.0) == 0


def test_fd_matches_cubic():
    K = gauss_curvature_fd("LA-S", lambda r: 4 * r**3 / 3, 1.0, 0.0, h=1e-4)
    assert K == pytest.approx(1 / 16, rel=1e-6)


def test_fd_plane():
    assert abs(gauss_curvature_fd("TA-S", lambda r: 0 * r + 2.0, 0.8, 0.4)) < 1e-8


def test_fd_parabola_sa2():
    K = gauss_curvature_fd("SA-T2", lambda r: r * r / 2, 1.0, 0.0)
    assert K == pytest.approx(0.25, rel=1e-5)


def test_fd_theta_invariant():
    p = make_profile("SA-S", 0.25, 1)
    k0 = gauss_curvature_fd("SA-S", p.local_f, 1.0, 0.0)
    k1 = gauss_curvature_fd("SA-S", p.local_f, 1.0, 1.0)
    assert k0 == pytest.approx(k1, rel=1e-6)


def test_fd_stencil_must_fit_domain():
    p = make_profile("TA-S", 0.25, 0.5)
    with pytest.raises(DomainError):
        gauss_curvature_fd("TA-S", p.local_f, p.domain[1] - 1e-6, 0.0, h=1e-5)


@pytest.mark.parametrize("family", list(Family))
def test_fd_order_on_smooth_profile(family):
    p = make_profile(family, 0.25, {"TA-S": 0.5, "TA-T": 1, "SA-S": 1, "SA-T1": 0.5,
                                     "SA-T2": 2, "LA-S": 1, "LA-T": 1}[family.value])
    r = p.r_ref
    K = gauss_curvature_analytic(family, r, p.fprime(r), p.fsecond(r))
    errs = [abs(gauss_curvature_fd(family, p.local_f, r, 0.3, h=h, theta_step=1e-3) - K)
            for h in (2e-2, 1e-2, 5e-3)]
    orders = [math.log2(errs[i] / errs[i + 1]) for i in range(2)]
    assert min(orders) >= 1.8
