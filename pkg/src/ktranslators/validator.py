"""Numerical check of K^alpha = <N, v> over interior grids."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import CurvatureError, DomainError
from .minkowski import lorentz_inner
from .surface import (
    Family,
    causal_gap,
    default_fd_step,
    gauss_curvature_analytic,
    gauss_curvature_fd,
    speed_vector,
    unit_normal,
)

CURVATURE_SOURCES = ("analytic", "fd")
INFINITE_SPAN = 1.0


@dataclass(frozen=True)
class UserCurve:
    """A generating curve that is not (necessarily) a closed-form profile.

    ``f`` is any callable; missing derivatives are taken by central
    differences of ``f`` (fprime) and of the resulting fprime (fsecond).
    Used for tabulated input and for negative controls.
    """

    family: Family
    alpha: float
    f: Callable
    domain: tuple[float, float]
    fprime_fn: Callable | None = None
    fsecond_fn: Callable | None = None
    label: str = "user curve"

    def __post_init__(self):
        object.__setattr__(self, "family", Family.parse(self.family))

    def check_inside(self, r):
        r = np.asarray(r, dtype=float)
        lo, hi = self.domain
        if np.any(r <= lo) or np.any(r >= hi):
            raise DomainError(f"r = {r} outside the curve domain ({lo}, {hi})")
        return r

    def fprime(self, r):
        r = self.check_inside(r)
        if self.fprime_fn is not None:
            return np.asarray(self.fprime_fn(r), dtype=float)
        h = default_fd_step(r) * 10
        return (np.asarray(self.f(r + h)) - np.asarray(self.f(r - h))) / (2 * h)

    def fsecond(self, r):
        r = self.check_inside(r)
        if self.fsecond_fn is not None:
            return np.asarray(self.fsecond_fn(r), dtype=float)
        h = default_fd_step(r) * 10
        return (np.asarray(self.f(r + h)) - 2 * np.asarray(self.f(r)) + np.asarray(self.f(r - h))) / h**2

    def gap(self, r):
        return np.abs(causal_gap(self.family, self.fprime(r)))

    @property
    def local_f(self):
        f = self.f
        dom = self.domain

        class _F:
            domain = dom

            def __call__(self, r):
                return f(r)

        return _F()

    def descriptor(self) -> dict:
        return {"family": self.family.value, "alpha": self.alpha, "curve": self.label, "domain": list(self.domain)}

    @classmethod
    def from_table(cls, family, alpha: float, r, f, label: str = "table") -> "UserCurve":
        r = np.asarray(r, dtype=float)
        f = np.asarray(f, dtype=float)
        if r.ndim != 1 or r.shape != f.shape or len(r) < 4:
            raise ValueError("table needs matching 1-D r and f columns with at least 4 rows")
        if np.any(np.diff(r) <= 0):
            raise ValueError("table r column must be strictly increasing")
        sp = CubicSpline(r, f)
        return cls(Family.parse(family), float(alpha), sp, (float(r[0]), float(r[-1])), sp.derivative(1), sp.derivative(2), label)


@dataclass(frozen=True)
class GridSpec:
    n_r: int = 100
    n_theta: int = 16
    inset: float = 0.1
    r_window: tuple[float, float] | None = None
    theta_window: tuple[float, float] | None = None
    fd_step: float | None = None

    def __post_init__(self):
        if self.n_r < 1 or self.n_theta < 1:
            raise ValueError("grid needs at least one sample in each direction")
        if not 0 <= self.inset < 0.5:
            raise ValueError("inset must lie in [0, 1/2)")

    def r_values(self, curve) -> np.ndarray:
        lo, hi = curve.domain
        if self.r_window is not None:
            a, b = map(float, self.r_window)
            if not (lo <= a < b <= hi):
                raise DomainError(f"r window [{a}, {b}] is not inside the domain ({lo}, {hi})")
        else:
            a, b = lo, (lo + INFINITE_SPAN if math.isinf(hi) else hi)
        w = b - a
        a, b = a + self.inset * w, b - self.inset * w
        if a <= lo or b >= hi:
            raise DomainError(
                f"grid [{a}, {b}] touches the domain ({lo}, {hi}) boundary; use a positive inset"
            )
        return np.linspace(a, b, self.n_r)

    def theta_values(self, family) -> np.ndarray:
        family = Family.parse(family)
        if self.theta_window is not None:
            a, b = map(float, self.theta_window)
            if not (math.isfinite(a) and math.isfinite(b)) or b <= a:
                raise ValueError("theta window must be a finite interval of positive width")
            return np.linspace(a, b, self.n_theta)
        if family.chart == "TA":
            return np.linspace(0.0, 2 * math.pi, self.n_theta, endpoint=False)
        return np.linspace(-2.0, 2.0, self.n_theta)


def _fd_steps(curve, r, fd_step):
    if fd_step is not None:
        return np.full_like(r, float(fd_step))
    lo, hi = curve.domain
    room = np.minimum(r - lo, hi - r)
    return np.minimum(default_fd_step(r), 1e-3 * room)


def _k_power(K, alpha, r, theta):
    K = np.asarray(K, dtype=float)
    bad = ~(K > 0)
    if np.any(bad):
        idx = np.argwhere(np.atleast_1d(bad))[0]
        rr = np.broadcast_to(r, K.shape)[tuple(idx)] if K.ndim else float(r)
        tt = np.broadcast_to(theta, K.shape)[tuple(idx)] if K.ndim else float(theta)
        kv = np.atleast_1d(K)[tuple(idx)]
        raise CurvatureError(f"K = {kv!r} <= 0 at (r, theta) = ({float(rr)!r}, {float(tt)!r}); not a translator here")
    return np.exp(alpha * np.log(K))


def speed_pairing(curve, r, theta):
    """<N, v> on the grid, with N built from the curve's f'."""
    fam = curve.family
    fp = curve.fprime(r)
    N = unit_normal(fam, fp, r, theta, gap=curve.gap(r))
    v = np.asarray(speed_vector(fam), dtype=float)
    return np.asarray(lorentz_inner(N, v))


def curvature(curve, r, theta, source: str = "analytic", f=None, fd_step=None):
    if source not in CURVATURE_SOURCES:
        raise ValueError(f"curvature source must be one of {CURVATURE_SOURCES}")
    r, theta = np.broadcast_arrays(np.asarray(r, dtype=float), np.asarray(theta, dtype=float))
    curve.check_inside(r)
    if source == "analytic":
        K = gauss_curvature_analytic(curve.family, r, curve.fprime(r), curve.fsecond(r), gap=curve.gap(r))
        return np.broadcast_to(np.asarray(K), r.shape)
    evaluator = curve.local_f if f is None else f
    return np.asarray(gauss_curvature_fd(curve.family, evaluator, r, theta, h=_fd_steps(curve, r, fd_step)))


def residual_at(curve, r, theta, curvature_source: str = "analytic", f=None, fd_step=None):
    """|K^alpha - <N, v>| at interior (r, theta); arrays broadcast.

    ``f`` replaces the curve's own f in the FD curvature (N still comes from
    the curve); that is how a mismatched profile is fed in as a control.
    Raises CurvatureError where K <= 0.
    """
    r, theta = np.broadcast_arrays(np.asarray(r, dtype=float), np.asarray(theta, dtype=float))
    K = curvature(curve, r, theta, curvature_source, f, fd_step)
    out = np.abs(_k_power(K, curve.alpha, r, theta) - speed_pairing(curve, r, theta))
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class ResidualReport:
    profile: dict
    n_r: int
    n_theta: int
    inset: float
    sup_residual_analytic: float
    mean_residual_analytic: float
    sup_residual_fd: float
    mean_residual_fd: float
    worst_point: tuple[float, float]
    worst_point_fd: tuple[float, float]
    max_rel_curvature_gap: float

    def to_dict(self) -> dict:
        d = asdict(self)
        d["worst_point"] = list(self.worst_point)
        d["worst_point_fd"] = list(self.worst_point_fd)
        return d

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_record(self) -> str:
        """One line of key=value pairs."""
        parts = [f"{k}={v!r}" for k, v in self.profile.items()]
        for k, v in self.to_dict().items():
            if k != "profile":
                parts.append(f"{k}={v!r}")
        return " ".join(parts)


def validate_grid(curve, grid: GridSpec = GridSpec(), f=None) -> ResidualReport:
    """Sweep residual_at over the grid with both curvature sources."""
    rs = grid.r_values(curve)
    ts = grid.theta_values(curve.family)
    R, T = np.meshgrid(rs, ts, indexing="ij")
    K_an = curvature(curve, R, T, "analytic")
    K_fd = curvature(curve, R, T, "fd", f, grid.fd_step)
    pairing = speed_pairing(curve, R, T)
    res_an = np.abs(_k_power(K_an, curve.alpha, R, T) - pairing)
    res_fd = np.abs(_k_power(K_fd, curve.alpha, R, T) - pairing)
    i_an = np.unravel_index(np.argmax(res_an), res_an.shape)
    i_fd = np.unravel_index(np.argmax(res_fd), res_fd.shape)
    return ResidualReport(
        profile=curve.descriptor(),
        n_r=grid.n_r,
        n_theta=grid.n_theta,
        inset=grid.inset,
        sup_residual_analytic=float(res_an.max()),
        mean_residual_analytic=float(res_an.mean()),
        sup_residual_fd=float(res_fd.max()),
        mean_residual_fd=float(res_fd.mean()),
        worst_point=(float(R[i_an]), float(T[i_an])),
        worst_point_fd=(float(R[i_fd]), float(T[i_fd])),
        max_rel_curvature_gap=float(np.max(np.abs(K_fd - K_an) / np.abs(K_an))),
    )

