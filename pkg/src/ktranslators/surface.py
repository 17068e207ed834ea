"""Rotational surfaces of Minkowski 3-space.

Four charts cover the rotational surfaces, one per causal type of the axis
(two for a spacelike axis):

    TA  (r cos t, r sin t, f(r))                  axis e3
    SA1 (f(r), r sinh t, r cosh t)                axis e1, curve in xz
    SA2 (f(r), r cosh t, r sinh t)                axis e1, curve in xy
    LA  (2 r t, f(r) + r - r t^2, f(r) - r - r t^2)  axis e2 + e3

All functions broadcast over numpy arrays in ``r`` and ``theta``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateError, DomainError
from .minkowski import MinkVec3, lorentz_inner, triple_det


class Family(enum.Enum):
    """The seven rotational translator families.

    Each member knows its chart, the causal type of axis and surface, and the
    sign convention used for the normal.
    """

    TA_S = "TA-S"
    TA_T = "TA-T"
    SA_S = "SA-S"
    SA_T1 = "SA-T1"
    SA_T2 = "SA-T2"
    LA_S = "LA-S"
    LA_T = "LA-T"

    @classmethod
    def parse(cls, tag) -> "Family":
        if isinstance(tag, cls):
            return tag
        try:
            return cls(str(tag).upper())
        except ValueError:
            choices = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown family {tag!r}; expected one of {choices}") from None

    @property
    def chart(self) -> str:
        return _CHART[self]

    @property
    def axis(self) -> str:
        return self.value.split("-")[0]

    @property
    def spacelike(self) -> bool:
        return self.value.split("-")[1] == "S"

    @property
    def lightlike_axis(self) -> bool:
        return self.axis == "LA"

    def describe(self) -> str:
        axis = {"TA": "timelike", "SA": "spacelike", "LA": "lightlike"}[self.axis]
        kind = "spacelike" if self.spacelike else "timelike"
        return f"{axis} axis, {kind} surface, chart {self.chart}"


_CHART = {
    Family.TA_S: "TA",
    Family.TA_T: "TA",
    Family.SA_S: "SA1",
    Family.SA_T1: "SA1",
    Family.SA_T2: "SA2",
    Family.LA_S: "LA",
    Family.LA_T: "LA",
}

_SPEED = {
    Family.TA_S: MinkVec3(0.0, 0.0, 1.0),
    Family.TA_T: MinkVec3(0.0, 0.0, 1.0),
    Family.SA_S: MinkVec3(-1.0, 0.0, 0.0),
    Family.SA_T1: MinkVec3(-1.0, 0.0, 0.0),
    Family.SA_T2: MinkVec3(1.0, 0.0, 0.0),
    Family.LA_S: MinkVec3(0.0, -1.0, -1.0),
    Family.LA_T: MinkVec3(0.0, -1.0, -1.0),
}


def speed_vector(family) -> MinkVec3:
    """Translation direction v; parallel to the rotation axis."""
    return _SPEED[Family.parse(family)]


def causal_gap(family, fprime):
    """Signed margin of the family's causal condition; positive iff it holds.

    TA-S, SA-T1: 1 - f'^2.  TA-T, SA-S: f'^2 - 1.  SA-T2: 1 + f'^2.
    LA-S: f'.  LA-T: -f'.
    """
    family = Family.parse(family)
    fp = np.asarray(fprime, dtype=float)
    if family in (Family.TA_S, Family.SA_T1):
        out = 1.0 - fp * fp
    elif family in (Family.TA_T, Family.SA_S):
        out = fp * fp - 1.0
    elif family is Family.SA_T2:
        out = 1.0 + fp * fp
    elif family is Family.LA_S:
        out = fp
    else:
        out = -fp
    return float(out) if out.ndim == 0 else out


def _check_r(r):
    if np.any(np.asarray(r) <= 0):
        raise DomainError("chart requires r > 0")


def parametrize(family, f, r, theta):
    """Point X(r, theta) of the family's chart given the profile value f(r).

    Returns a MinkVec3 for scalar input, otherwise an array (..., 3).
    """
    family = Family.parse(family)
    _check_r(r)
    out = _chart(family.chart, f, r, theta)
    if out.ndim == 1:
        return MinkVec3(*map(float, out))
    return out


def _chart(chart, f, r, theta):
    f, r, theta = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (f, r, theta)))
    if chart == "TA":
        out = np.stack([r * np.cos(theta), r * np.sin(theta), f], axis=-1)
    elif chart == "SA1":
        out = np.stack([f, r * np.sinh(theta), r * np.cosh(theta)], axis=-1)
    elif chart == "SA2":
        out = np.stack([f, r * np.cosh(theta), r * np.sinh(theta)], axis=-1)
    else:
        out = np.stack([2 * r * theta, f + r - r * theta**2, f - r - r * theta**2], axis=-1)
    return out


def chart_partials(family, fprime, r, theta):
    """Analytic first partials (X_r, X_theta) as arrays (..., 3)."""
    family = Family.parse(family)
    fp, r, t = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (fprime, r, theta)))
    zero = np.zeros_like(r)
    chart = family.chart
    if chart == "TA":
        xr = np.stack([np.cos(t), np.sin(t), fp], axis=-1)
        xt = np.stack([-r * np.sin(t), r * np.cos(t), zero], axis=-1)
    elif chart == "SA1":
        xr = np.stack([fp, np.sinh(t), np.cosh(t)], axis=-1)
        xt = np.stack([zero, r * np.cosh(t), r * np.sinh(t)], axis=-1)
    elif chart == "SA2":
        xr = np.stack([fp, np.cosh(t), np.sinh(t)], axis=-1)
        xt = np.stack([zero, r * np.sinh(t), r * np.cosh(t)], axis=-1)
    else:
        xr = np.stack([2 * t, fp + 1 - t**2, fp - 1 - t**2], axis=-1)
        xt = np.stack([2 * r, -2 * r * t, -2 * r * t], axis=-1)
    return xr, xt


@dataclass(frozen=True)
class SurfacePoint:
    position: MinkVec3
    Xr: MinkVec3
    Xtheta: MinkVec3
    E: float
    F: float
    G: float

    @property
    def discriminant(self) -> float:
        return self.E * self.G - self.F**2


def surface_point(family, f: float, fprime: float, r: float, theta: float) -> SurfacePoint:
    """Position, first partials and first fundamental form at one point."""
    xr, xt = chart_partials(family, fprime, r, theta)
    return SurfacePoint(
        position=parametrize(family, f, r, theta),
        Xr=MinkVec3(*map(float, xr)),
        Xtheta=MinkVec3(*map(float, xt)),
        E=lorentz_inner(xr, xr),
        F=lorentz_inner(xr, xt),
        G=lorentz_inner(xt, xt),
    )


def unit_normal(family, fprime, r, theta, tol: float = 0.0, gap=None):
    """Unit normal with the orientation that makes <N, v> positive.

    <N, N> is -1 on the spacelike families and +1 on the timelike ones.
    Raises DegenerateError where the causal condition fails or is within
    ``tol`` of failing.  ``gap`` overrides the causal gap formed from f'
    (see :func:`causal_gap`) when a cancellation-free value is known.
    """
    family = Family.parse(family)
    fp, r, t = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (fprime, r, theta)))
    gap = causal_gap(family, fp) if gap is None else np.broadcast_to(np.asarray(gap, dtype=float), fp.shape)
    if np.any(np.asarray(gap) <= tol):
        raise DegenerateError(f"{family.value}: causal condition fails for f'={fprime}")
    chart = family.chart
    if chart == "TA":
        s = 1.0 / np.sqrt(gap)
        out = -s[..., None] * np.stack([np.cos(t) * fp, np.sin(t) * fp, np.ones_like(fp)], axis=-1)
    elif chart == "SA1":
        s = 1.0 / np.sqrt(gap)
        out = -s[..., None] * np.stack([np.ones_like(fp), fp * np.sinh(t), fp * np.cosh(t)], axis=-1)
    elif chart == "SA2":
        s = 1.0 / np.sqrt(gap)
        out = s[..., None] * np.stack([np.ones_like(fp), -fp * np.cosh(t), -fp * np.sinh(t)], axis=-1)
    else:
        s = 1.0 / (2.0 * np.sqrt(gap))
        out = s[..., None] * np.stack([-2 * t, -1 + t**2 + fp, 1 + t**2 + fp], axis=-1)
    if out.ndim == 1:
        return MinkVec3(*map(float, out))
    return out


def gauss_curvature_analytic(family, r, fprime, fsecond, gap=None):
    """Gauss curvature of the rotational surface from f' and f''.

    ``gap`` may carry |1 -+ f'^2| (or |f'| on the lightlike charts) computed
    without cancellation; otherwise it is formed from ``fprime``.

        TA  chart:  K = -f' f'' / (r (1 - f'^2)^2)
        SA1 chart:  K =  f' f'' / (r (f'^2 - 1)^2)
        SA2 chart:  K =  f' f'' / (r (1 + f'^2)^2)
        LA  chart:  K =  f'' / (8 r f'^2)
    """
    family = Family.parse(family)
    _check_r(r)
    r = np.asarray(r, dtype=float)
    fp = np.asarray(fprime, dtype=float)
    fs = np.asarray(fsecond, dtype=float)
    if gap is None:
        gap = np.abs(causal_gap(family, fp))
    gap = np.asarray(gap, dtype=float)
    if np.any(gap == 0):
        raise DegenerateError(f"{family.value}: degenerate metric, curvature undefined")
    chart = family.chart
    if chart == "TA":
        out = -fp * fs / (r * gap**2)
    elif chart in ("SA1", "SA2"):
        out = fp * fs / (r * gap**2)
    else:
        out = fs / (8.0 * r * gap**2)
    return float(out) if out.ndim == 0 else out


def default_fd_step(r):
    return np.maximum(1e-5, 1e-4 * np.asarray(r, dtype=float))


def _f_stencil(f, r, offsets):
    """f on r[..., None] + offsets, anchored per row when ``f`` supports it."""
    if hasattr(f, "stencil"):
        return f.stencil(r, offsets)
    return np.asarray(f(r[..., None] + offsets), dtype=float)


def _chart_delta(chart, df, r, theta, o, dt):
    """X(r + o, theta + dt) - X(r, theta) given df = f(r + o) - f(r).

    Written with sum-to-product identities so that rounding is relative to
    the displacement rather than to |X|.
    """
    half = theta + dt / 2
    if chart == "TA":
        dc = -2 * np.sin(dt / 2) * np.sin(half)
        ds = 2 * np.sin(dt / 2) * np.cos(half)
        return np.stack([o * np.cos(theta + dt) + r * dc, o * np.sin(theta + dt) + r * ds, df], axis=-1)
    if chart in ("SA1", "SA2"):
        dsh = 2 * np.sinh(dt / 2) * np.cosh(half)
        dch = 2 * np.sinh(dt / 2) * np.sinh(half)
        a = o * np.sinh(theta + dt) + r * dsh
        b = o * np.cosh(theta + dt) + r * dch
        if chart == "SA1":
            return np.stack([df, a, b], axis=-1)
        return np.stack([df, b, a], axis=-1)
    t = theta
    dx = 2 * (o * (t + dt) + r * dt)
    drt2 = o * (t + dt) ** 2 + r * dt * (2 * t + dt)
    return np.stack([dx, df + o - drt2, df - o - drt2], axis=-1)


def gauss_curvature_fd(family, f, r, theta, h=None, theta_step: float = 1e-4):
    """Gauss curvature from central differences of the chart.

    Uses K = -[det(Xr,Xt,Xrr) det(Xr,Xt,Xtt) - det(Xr,Xt,Xrt)^2] / (EG-F^2)^2
    with every partial taken by second-order central differences of X, so
    it shares nothing with :func:`gauss_curvature_analytic`.  Differences
    are formed from displacements X(r+o, theta+dt) - X(r, theta).

    ``f`` is a callable profile evaluator.  An object with a
    ``stencil(r, offsets)`` method returning f(r + o) - f(r) is used instead
    (see ``Profile.local_f``).  If ``f`` exposes a ``domain`` the stencil
    [r - 2h, r + 2h] must lie inside it.
    """
    family = Family.parse(family)
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    r, theta = np.broadcast_arrays(r, theta)
    h = default_fd_step(r) if h is None else np.broadcast_to(np.asarray(h, dtype=float), r.shape)
    if np.any(h <= 0):
        raise ValueError("FD step must be positive")
    domain = getattr(f, "domain", None)
    if domain is not None:
        lo, hi = domain
        if np.any(r - 2 * h <= lo) or np.any(r + 2 * h >= hi):
            raise DomainError(f"FD stencil leaves the domain ({lo}, {hi})")
    _check_r(r - h)

    offs = np.stack([-h, np.zeros_like(h), h], axis=-1)
    fv = _f_stencil(f, r, offs)  # (..., 3)
    df = fv - fv[..., 1:2]
    k = theta_step
    chart = family.chart

    def D(i, dt):
        return _chart_delta(chart, df[..., i], r, theta, offs[..., i], dt)

    dp0, dm0 = D(2, 0.0), D(0, 0.0)
    d0p, d0m = D(1, k), D(1, -k)
    dpp, dpm = D(2, k), D(2, -k)
    dmp, dmm = D(0, k), D(0, -k)

    hh = h[..., None]
    xr = (dp0 - dm0) / (2 * hh)
    xt = (d0p - d0m) / (2 * k)
    xrr = (dp0 + dm0) / hh**2
    xtt = (d0p + d0m) / k**2
    xrt = (dpp - dpm - dmp + dmm) / (4 * hh * k)

    E = lorentz_inner(xr, xr)
    F = lorentz_inner(xr, xt)
    G = lorentz_inner(xt, xt)
    disc = np.asarray(E * G - F * F)
    if np.any(np.abs(disc) <= 1e-300):
        raise DegenerateError("first fundamental form is degenerate at the FD point")
    num = triple_det(xr, xt, xrr) * triple_det(xr, xt, xtt) - triple_det(xr, xt, xrt) ** 2
    out = -np.asarray(num) / disc**2
    return float(out) if out.ndim == 0 else out
