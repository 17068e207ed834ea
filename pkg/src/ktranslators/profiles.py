"""Closed-form generating curves of rotational K^alpha-translators.

For the TA, SA1 and SA2 charts the translator equation reduces, through the
auxiliary function h = |1 -+ f'^2|^(-1/2) (h = (1 + f'^2)^(-1/2) on SA2), to
the separable ODE

    h^((alpha-1)/alpha) h' = sigma r,        sigma = +-1 per family,

whose solution is h = (m + sigma c r^2)^(alpha/(2 alpha - 1)) with
c = (2 alpha - 1)/(2 alpha), or h = m exp(sigma r^2 / 2) when alpha = 1/2.
On the lightlike chart f' itself solves f'' = 8 r |f'|^((4 alpha - 1)/(2 alpha))
and is a power (or exponential) of m + lambda k r^2, k = 2(1 - 2 alpha)/alpha.

Everything here is evaluated from those closed forms: h, f', f'' and the
causal gap.  Only f needs quadrature.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy import integrate

from .errors import DomainError, InadmissibleError, QuadratureError
from .surface import Family

HALF_TOL = 1e-12

# sigma of the h-ODE per family
_SIGMA = {
    Family.TA_S: -1.0,
    Family.TA_T: 1.0,
    Family.SA_S: -1.0,
    Family.SA_T1: 1.0,
    Family.SA_T2: -1.0,
}
# lambda of the lightlike base; also the sign of f'
_LAMBDA = {Family.LA_S: 1.0, Family.LA_T: -1.0}


class EndpointBehavior(enum.Enum):
    CONICAL_POINT = "ConicalPoint"
    DEGENERATE_TO_TIMELIKE = "DegenerateToTimelike"
    DEGENERATE_TO_SPACELIKE = "DegenerateToSpacelike"
    SECOND_DERIVATIVE_BLOWUP = "SecondDerivativeBlowup"
    UNBOUNDED_END = "UnboundedEnd"
    AXIS_NON_ORTHOGONAL = "AxisNonOrthogonal"
    AXIS_ORTHOGONAL = "AxisOrthogonal"
    FPRIME_BLOWUP = "FprimeBlowup"


EB = EndpointBehavior
# endpoints where the base of the closed form vanishes
_ZERO_BASE = {EB.CONICAL_POINT, EB.DEGENERATE_TO_TIMELIKE, EB.DEGENERATE_TO_SPACELIKE, EB.FPRIME_BLOWUP}


def regime(alpha: float) -> str:
    """'half' for alpha = 1/2, 'low' for 0 < alpha < 1/2, 'outer' otherwise."""
    alpha = float(alpha)
    if not math.isfinite(alpha) or alpha == 0.0:
        raise InadmissibleError("alpha must be a finite nonzero real")
    if alpha == 0.5:
        return "half"
    if abs(alpha - 0.5) < HALF_TOL:
        raise InadmissibleError(
            "alpha within 1e-12 of 1/2 is ill-conditioned; pass exactly 0.5 for the exponential case"
        )
    return "low" if 0.0 < alpha < 0.5 else "outer"


@dataclass(frozen=True)
class DomainCase:
    """One item of a classification table: admissible m-range and its domain."""

    label: str
    lo: float
    hi: float
    left: EndpointBehavior
    right: EndpointBehavior

    @property
    def domain(self) -> tuple[float, float]:
        return (self.lo, self.hi)


_REGIME_TEXT = {"half": "alpha = 1/2", "low": "0 < alpha < 1/2", "outer": "alpha not in [0, 1/2]"}


def _sq(x: float) -> float:
    return math.sqrt(x)


def classify(family, alpha: float, m: float) -> DomainCase:
    """Look up the classification item for (family, alpha, m).

    Raises InadmissibleError naming the violated condition.
    """
    family = Family.parse(family)
    reg = regime(alpha)
    a, m = float(alpha), float(m)
    if not math.isfinite(m):
        raise InadmissibleError("m must be finite")
    inf = math.inf
    head = f"{family.describe()}, {_REGIME_TEXT[reg]}"

    def case(cond, lo, hi, left, right):
        return DomainCase(f"{head}, {cond}", lo, hi, left, right)

    def reject(requirement):
        raise InadmissibleError(f"{head}: m = {m!r} is inadmissible; requires {requirement}")

    def axis(at_m_one=False):
        return EB.AXIS_ORTHOGONAL if at_m_one else EB.AXIS_NON_ORTHOGONAL

    if family is Family.TA_S:
        if reg == "half":
            if m > 1:
                return case("m > 1", 0.0, _sq(math.log(m * m)), EB.AXIS_NON_ORTHOGONAL, EB.SECOND_DERIVATIVE_BLOWUP)
            reject("m > 1")
        if reg == "low":
            hi = _sq(2 * a * (1 - m) / (1 - 2 * a)) if m < 1 else 0.0
            if m < 0:
                return case("m < 0", _sq(2 * a * m / (2 * a - 1)), hi, EB.DEGENERATE_TO_TIMELIKE, EB.SECOND_DERIVATIVE_BLOWUP)
            if m < 1:
                left = EB.CONICAL_POINT if m == 0 else EB.AXIS_NON_ORTHOGONAL
                return case("0 <= m < 1", 0.0, hi, left, EB.SECOND_DERIVATIVE_BLOWUP)
            reject("0 <= m < 1 or m < 0")
        if m > 1:
            return case("m > 1", 0.0, _sq(2 * a * (m - 1) / (2 * a - 1)), EB.AXIS_NON_ORTHOGONAL, EB.SECOND_DERIVATIVE_BLOWUP)
        reject("m > 1")

    if family is Family.TA_T:
        if reg == "half":
            if m > 0:
                return case("m > 0", 0.0, inf, EB.AXIS_NON_ORTHOGONAL, EB.UNBOUNDED_END)
            reject("m > 0")
        if reg == "low":
            if m > 0:
                return case("m > 0", 0.0, _sq(2 * a * m / (1 - 2 * a)), EB.AXIS_NON_ORTHOGONAL, EB.DEGENERATE_TO_SPACELIKE)
            reject("m > 0")
        if m >= 0:
            left = EB.FPRIME_BLOWUP if m == 0 else EB.AXIS_NON_ORTHOGONAL
            return case("m >= 0", 0.0, inf, left, EB.UNBOUNDED_END)
        return case("m < 0", _sq(2 * a * m / (1 - 2 * a)), inf, EB.FPRIME_BLOWUP, EB.UNBOUNDED_END)

    if family is Family.SA_S:
        if reg == "half":
            if m > 0:
                return case("m > 0", 0.0, inf, EB.AXIS_NON_ORTHOGONAL, EB.UNBOUNDED_END)
            reject("m > 0")
        if reg == "low":
            if m >= 0:
                left = EB.CONICAL_POINT if m == 0 else EB.AXIS_NON_ORTHOGONAL
                return case("m >= 0", 0.0, inf, left, EB.UNBOUNDED_END)
            return case("m < 0", _sq(2 * a * m / (2 * a - 1)), inf, EB.DEGENERATE_TO_TIMELIKE, EB.UNBOUNDED_END)
        if m > 0:
            return case("m > 0", 0.0, _sq(2 * a * m / (2 * a - 1)), EB.AXIS_NON_ORTHOGONAL, EB.FPRIME_BLOWUP)
        reject("m > 0")

    if family is Family.SA_T1:
        if reg == "half":
            if m >= 1:
                return case("m >= 1", 0.0, inf, axis(m == 1), EB.UNBOUNDED_END)
            if m > 0:
                return case("0 < m < 1", _sq(math.log(1 / (m * m))), inf, EB.SECOND_DERIVATIVE_BLOWUP, EB.UNBOUNDED_END)
            reject("m > 0")
        if reg == "low":
            hi = _sq(2 * a * m / (1 - 2 * a)) if m > 0 else 0.0
            if 0 < m <= 1:
                return case("0 < m <= 1", 0.0, hi, axis(m == 1), EB.DEGENERATE_TO_SPACELIKE)
            if m > 1:
                return case("m > 1", _sq(2 * a * (m - 1) / (1 - 2 * a)), hi, EB.SECOND_DERIVATIVE_BLOWUP, EB.DEGENERATE_TO_SPACELIKE)
            reject("m > 0")
        if m >= 1:
            return case("m >= 1", 0.0, inf, axis(m == 1), EB.UNBOUNDED_END)
        return case("m < 1", _sq(2 * a * (1 - m) / (2 * a - 1)), inf, EB.SECOND_DERIVATIVE_BLOWUP, EB.UNBOUNDED_END)

    if family is Family.SA_T2:
        if reg == "half":
            if 0 < m <= 1:
                return case("0 < m <= 1", 0.0, inf, axis(m == 1), EB.UNBOUNDED_END)
            if m > 1:
                return case("m > 1", _sq(math.log(m * m)), inf, EB.SECOND_DERIVATIVE_BLOWUP, EB.UNBOUNDED_END)
            reject("m > 0")
        if reg == "low":
            if m >= 1:
                return case("m >= 1", 0.0, inf, axis(m == 1), EB.UNBOUNDED_END)
            return case("m < 1", _sq(2 * a * (1 - m) / (1 - 2 * a)), inf, EB.SECOND_DERIVATIVE_BLOWUP, EB.UNBOUNDED_END)
        hi = _sq(2 * a * m / (2 * a - 1)) if m > 0 else 0.0
        if 0 < m <= 1:
            return case("0 < m <= 1", 0.0, hi, axis(m == 1), EB.FPRIME_BLOWUP)
        if m > 1:
            return case("m > 1", _sq(2 * a * (m - 1) / (2 * a - 1)), hi, EB.SECOND_DERIVATIVE_BLOWUP, EB.FPRIME_BLOWUP)
        reject("m > 0")

    if family is Family.LA_S:
        if reg == "half":
            if m > 0:
                return case("m > 0", 0.0, inf, EB.AXIS_NON_ORTHOGONAL, EB.UNBOUNDED_END)
            reject("m > 0")
        if reg == "low":
            if m >= 0:
                left = EB.CONICAL_POINT if m == 0 else EB.AXIS_NON_ORTHOGONAL
                return case("m >= 0", 0.0, inf, left, EB.UNBOUNDED_END)
            return case("m < 0", _sq(a * m / (2 * (2 * a - 1))), inf, EB.DEGENERATE_TO_TIMELIKE, EB.UNBOUNDED_END)
        if m > 0:
            return case("m > 0", 0.0, _sq(a * m / (2 * (2 * a - 1))), EB.AXIS_NON_ORTHOGONAL, EB.FPRIME_BLOWUP)
        reject("m > 0")

    # LA-T
    if reg == "half":
        if m > 0:
            return case("m > 0", 0.0, inf, EB.AXIS_NON_ORTHOGONAL, EB.UNBOUNDED_END)
        reject("m > 0")
    if reg == "low":
        if m > 0:
            return case("m > 0", 0.0, _sq(a * m / (2 * (1 - 2 * a))), EB.AXIS_NON_ORTHOGONAL, EB.DEGENERATE_TO_SPACELIKE)
        reject("m > 0")
    if m >= 0:
        left = EB.FPRIME_BLOWUP if m == 0 else EB.AXIS_NON_ORTHOGONAL
        return case("m >= 0", 0.0, inf, left, EB.UNBOUNDED_END)
    return case("m < 0", _sq(a * m / (2 * (1 - 2 * a))), inf, EB.FPRIME_BLOWUP, EB.UNBOUNDED_END)


def maximal_domain(family, alpha: float, m: float) -> tuple[float, float]:
    """Open interval (r_lo, r_hi) on which the profile exists; r_hi may be inf."""
    return classify(family, alpha, m).domain


def h_value(family, alpha: float, m: float, r):
    """The auxiliary function h at r (no domain check, only base and range).

    h = (1 - f'^2)^(-1/2) on TA-S and SA-T1, (f'^2 - 1)^(-1/2) on SA-S and
    TA-T, (1 + f'^2)^(-1/2) on SA-T2.  Lightlike families have no h.
    """
    family = Family.parse(family)
    if family.lightlike_axis:
        raise InadmissibleError("h is not defined on the lightlike-axis families")
    reg = regime(alpha)
    r = np.asarray(r, dtype=float)
    sigma = _SIGMA[family]
    if reg == "half":
        if m <= 0:
            raise InadmissibleError("alpha = 1/2 requires m > 0")
        h = m * np.exp(sigma * r * r / 2)
    else:
        c = (2 * alpha - 1) / (2 * alpha)
        base = m + sigma * c * r * r
        if np.any(base <= 0):
            raise DomainError(f"base m + sigma c r^2 is nonpositive at r = {r}")
        h = base ** (alpha / (2 * alpha - 1))
    if family in (Family.TA_S, Family.SA_T1):
        bad = h < 1
        need = "h >= 1"
    elif family is Family.SA_T2:
        bad = (h <= 0) | (h > 1)
        need = "0 < h <= 1"
    else:
        bad = h <= 0
        need = "h > 0"
    if np.any(bad):
        raise DomainError(f"{family.value}: h = {h} violates {need}")
    return float(h) if h.ndim == 0 else h


def _gauss_legendre(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return (x + 1) / 2, w / 2


_GL_NODES, _GL_WEIGHTS = _gauss_legendre(16)


@dataclass(frozen=True)
class QuadOptions:
    epsabs: float = 1e-10
    epsrel: float = 1e-10
    limit: int = 400


@dataclass(frozen=True)
class Profile:
    """A resolved translator: family, exponent, integration constant, branch.

    The domain is always the maximal one from :func:`classify`.  f is
    anchored so that f(r_ref) = 0; r_ref defaults to the domain midpoint, or
    r_lo + 1 when the domain is unbounded.
    """

    family: Family
    alpha: float
    m: float
    sign: str = "+"
    r_ref: float | None = None
    case: DomainCase = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "family", Family.parse(self.family))
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "m", float(self.m))
        if self.sign not in ("+", "-"):
            raise InadmissibleError(f"sign must be '+' or '-', got {self.sign!r}")
        if self.family.lightlike_axis and self.sign != "+":
            raise InadmissibleError("lightlike-axis families have a fixed sign of f'; use sign '+'")
        object.__setattr__(self, "case", classify(self.family, self.alpha, self.m))
        lo, hi = self.case.domain
        if self.r_ref is None:
            ref = lo + 1.0 if math.isinf(hi) else 0.5 * (lo + hi)
        else:
            ref = float(self.r_ref)
            if not lo <= ref <= hi or math.isinf(ref):
                raise DomainError(f"r_ref = {ref} outside the closed domain [{lo}, {hi}]")
        object.__setattr__(self, "r_ref", ref)

    # -- basic data -------------------------------------------------------

    @property
    def domain(self) -> tuple[float, float]:
        return self.case.domain

    @property
    def regime(self) -> str:
        return regime(self.alpha)

    @property
    def branch(self) -> float:
        return 1.0 if self.sign == "+" else -1.0

    @cached_property
    def _consts(self):
        a = self.alpha
        if self.family.lightlike_axis:
            lam = _LAMBDA[self.family]
            if self.regime == "half":
                return lam, None, None
            k = 2 * (1 - 2 * a) / a
            return lam, lam * k, 2 * a / (1 - 2 * a)
        sigma = _SIGMA[self.family]
        if self.regime == "half":
            return sigma, None, None
        c = (2 * a - 1) / (2 * a)
        return sigma, sigma * c, 2 * a / (1 - 2 * a)

    def check_inside(self, r, allow_endpoint: bool = False):
        r = np.asarray(r, dtype=float)
        lo, hi = self.domain
        if allow_endpoint:
            ok = (r >= lo) & (r <= hi) & np.isfinite(r)
        else:
            ok = (r > lo) & (r < hi)
        if not np.all(ok):
            raise DomainError(
                f"{self.family.value} alpha={self.alpha!r} m={self.m!r}: r = {r} outside domain ({lo}, {hi})"
            )
        return r

    def base(self, r):
        """Base of the power law (m + coeff r^2); None-valued for alpha = 1/2."""
        _, coeff, _ = self._consts
        if coeff is None:
            raise ValueError("alpha = 1/2 profiles are exponential; no power-law base")
        r = np.asarray(r, dtype=float)
        return self.m + coeff * r * r

    # -- closed forms on raw arrays (no domain check) ----------------------

    def _log_gap(self, r):
        """log of the causal gap: log h^-2 for h-families, log|f'| for LA."""
        sgn, coeff, expo = self._consts
        r = np.asarray(r, dtype=float)
        if self.family.lightlike_axis:
            if coeff is None:
                return math.log(self.m) + 4 * sgn * r * r
            return expo * np.log(self.m + coeff * r * r)
        if coeff is None:
            return -sgn * r * r - 2 * math.log(self.m)
        return expo * np.log(self.m + coeff * r * r)

    def _log_gap_from_base(self, base):
        _, _, expo = self._consts
        return expo * np.log(base)

    def _fp_from_log_gap(self, lg):
        fam = self.family
        if fam.lightlike_axis:
            return _LAMBDA[fam] * np.exp(lg)
        if fam in (Family.TA_S, Family.SA_T1):
            f2 = -np.expm1(lg)
        elif fam is Family.SA_T2:
            f2 = np.expm1(lg)
        else:
            f2 = 1.0 + np.exp(lg)
        return self.branch * np.sqrt(f2)

    def _fprime_raw(self, r):
        return self._fp_from_log_gap(self._log_gap(r))

    def _gap_raw(self, r):
        return np.exp(self._log_gap(r))

    def _dgap_raw(self, r):
        """d/dr of the causal gap, differentiated by hand from the closed form."""
        sgn, coeff, expo = self._consts
        r = np.asarray(r, dtype=float)
        gap = self._gap_raw(r)
        if coeff is None:
            rate = 8 * sgn * r if self.family.lightlike_axis else -2 * sgn * r
            return rate * gap
        return expo * 2 * coeff * r * gap / (self.m + coeff * r * r)

    def _fsecond_raw(self, r):
        fam = self.family
        dgap = self._dgap_raw(r)
        if fam.lightlike_axis:
            return _LAMBDA[fam] * dgap
        # d(f'^2)/dr = -dgap (1 - gap families) or +dgap
        d_f2 = -dgap if fam in (Family.TA_S, Family.SA_T1) else dgap
        return d_f2 / (2 * self._fprime_raw(r))

    # -- public evaluators --------------------------------------------------

    def h(self, r, allow_endpoint: bool = False):
        r = self.check_inside(r, allow_endpoint)
        if self.family.lightlike_axis:
            raise InadmissibleError("h is not defined on the lightlike-axis families")
        out = np.exp(-0.5 * self._log_gap(r))
        return float(out) if out.ndim == 0 else out

    def hprime(self, r):
        r = self.check_inside(r)
        if self.family.lightlike_axis:
            raise InadmissibleError("h is not defined on the lightlike-axis families")
        gap = self._gap_raw(r)
        out = -0.5 * gap**-1.5 * self._dgap_raw(r)
        return float(out) if out.ndim == 0 else out

    def gap(self, r):
        """Exact causal gap: h^-2 = |1 -+ f'^2| (1 + f'^2 on SA2), or |f'| on LA."""
        r = self.check_inside(r)
        out = self._gap_raw(r)
        return float(out) if out.ndim == 0 else out

    def fprime(self, r, allow_endpoint: bool = False):
        r = self.check_inside(r, allow_endpoint)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = self._fprime_raw(r)
        if not np.all(np.isfinite(out)):
            raise DomainError(f"f' is unbounded or undefined at r = {r}")
        return float(out) if np.ndim(out) == 0 else out

    def fsecond(self, r, allow_endpoint: bool = False):
        r = self.check_inside(r, allow_endpoint)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = self._fsecond_raw(r)
        if not np.all(np.isfinite(out)):
            raise DomainError(f"f'' is unbounded at r = {r}")
        return float(out) if np.ndim(out) == 0 else out

    def f(self, r, quad: QuadOptions = QuadOptions()):
        """f(r) with f(r_ref) = 0; vectorised over r."""
        return integrate_f(self, self.r_ref, r, quad)

    def endpoint_behavior(self, which: str) -> EndpointBehavior:
        return endpoint_behavior(self, which)

    @cached_property
    def local_f(self):
        return _LocalF(self)

    # -- serialisation ------------------------------------------------------

    def descriptor(self) -> dict:
        lo, hi = self.domain
        return {
            "family": self.family.value,
            "alpha": self.alpha,
            "m": self.m,
            "sign": self.sign,
            "r_ref": self.r_ref,
            "domain": [_num(lo), _num(hi)],
        }

    def to_json(self) -> str:
        return json.dumps(self.descriptor())

    @classmethod
    def from_descriptor(cls, d: dict) -> "Profile":
        prof = cls(Family.parse(d["family"]), float(d["alpha"]), float(d["m"]), d.get("sign", "+"), d.get("r_ref"))
        if "domain" in d:
            dom = tuple(_unnum(x) for x in d["domain"])
            if dom != prof.domain:
                raise InadmissibleError(f"descriptor domain {dom} differs from the maximal domain {prof.domain}")
        return prof

    @classmethod
    def from_json(cls, text: str) -> "Profile":
        return cls.from_descriptor(json.loads(text))


def _num(x: float):
    return "inf" if math.isinf(x) else x


def _unnum(x) -> float:
    return math.inf if x == "inf" else float(x)


def make_profile(family, alpha: float, m: float, sign: str = "+", r_ref: float | None = None) -> Profile:
    return Profile(Family.parse(family), alpha, m, sign, r_ref)


def fprime(profile: Profile, r, allow_endpoint: bool = False):
    return profile.fprime(r, allow_endpoint)


def fsecond(profile: Profile, r, allow_endpoint: bool = False):
    return profile.fsecond(r, allow_endpoint)


class _LocalF:
    """f near a point, anchored at that point (f(center) = 0).

    Stencil values f(r + o) - f(r) are Gauss-Legendre integrals of f' over
    [r, r + o]; for the tiny offsets of an FD stencil this is exact to
    rounding, which keeps second differences free of quadrature noise.
    """

    def __init__(self, profile: Profile):
        self.profile = profile
        self.domain = profile.domain

    def stencil(self, r, offsets):
        r = np.asarray(r, dtype=float)[..., None]
        offsets = np.asarray(offsets, dtype=float)
        nodes = r[..., None] + offsets[..., None] * _GL_NODES
        vals = self.profile._fprime_raw(nodes)
        return offsets * np.sum(vals * _GL_WEIGHTS, axis=-1)


def endpoint_behavior(profile: Profile, which: str) -> EndpointBehavior:
    if which in ("left", "lo"):
        return profile.case.left
    if which in ("right", "hi"):
        return profile.case.right
    raise ValueError("which must be 'left' or 'right'")


def blowup_exponent(profile: Profile, which: str) -> float:
    """gamma such that |f'| ~ |r - r0|^(-gamma) at an FprimeBlowup endpoint."""
    if endpoint_behavior(profile, which) is not EB.FPRIME_BLOWUP:
        return 0.0
    _, _, expo = profile._consts
    r0 = profile.domain[0] if which in ("left", "lo") else profile.domain[1]
    order = 2.0 if r0 == 0.0 else 1.0
    power = expo if profile.family.lightlike_axis else expo / 2
    return -power * order


def _endpoint_integral(profile: Profile, which: str, x: float, quad: QuadOptions) -> float:
    """Integral of f' from the domain endpoint ``which`` to the interior point x."""
    lo, hi = profile.domain
    r0 = lo if which == "left" else hi
    behavior = endpoint_behavior(profile, which)
    gamma = blowup_exponent(profile, which)
    if gamma >= 1:
        raise QuadratureError(
            f"f' ~ |r - {r0}|^-{gamma:.6g} at the {which} endpoint: the integral diverges"
        )
    n = max(2, math.ceil(1.0 / (1.0 - gamma)) + 1)
    width = x - r0
    zero_base = behavior in _ZERO_BASE and profile.regime != "half"
    _, coeff, _ = profile._consts

    def integrand(s):
        d = width * s**n
        if zero_base:
            # base = coeff (r - r0)(r + r0) exactly, since it vanishes at r0
            base = coeff * d * (2 * r0 + d) if r0 != 0.0 else coeff * d * d
            if profile.m != 0.0 and r0 == 0.0:
                base = profile.m + coeff * d * d
            with np.errstate(divide="ignore", invalid="ignore"):
                fp = profile._fp_from_log_gap(profile._log_gap_from_base(base))
        else:
            fp = profile._fprime_raw(r0 + d)
        return float(fp) * n * width * s ** (n - 1)

    return _quad(integrand, 0.0, 1.0, quad, f"[{r0}, {x}] from the {which} endpoint")


def _quad(func, a, b, quad: QuadOptions, what: str) -> float:
    val, err, info = integrate.quad(
        func, a, b, epsabs=quad.epsabs, epsrel=quad.epsrel, limit=quad.limit, full_output=1
    )[:3]
    if not math.isfinite(val) or err > max(quad.epsabs, quad.epsrel * abs(val)) * 10:
        raise QuadratureError(
            f"quadrature over {what} missed tolerance: value={val!r}, error estimate={err:.3g}, "
            f"subintervals={info.get('last')}, evaluations={info.get('neval')}"
        )
    return float(val)


def _integral(profile: Profile, a: float, b: float, quad: QuadOptions) -> float:
    if a == b:
        return 0.0
    if a > b:
        return -_integral(profile, b, a, quad)
    lo, hi = profile.domain
    at_lo, at_hi = a == lo, b == hi
    if at_lo and at_hi:
        mid = 0.5 * (a + b)
        return _integral(profile, a, mid, quad) + _integral(profile, mid, b, quad)
    if at_lo:
        return _endpoint_integral(profile, "left", b, quad)
    if at_hi:
        return -_endpoint_integral(profile, "right", a, quad)

    def integrand(t):
        return float(profile._fprime_raw(t))

    return _quad(integrand, a, b, quad, f"[{a}, {b}]")


def integrate_f(profile: Profile, r_ref: float, r, quad: QuadOptions = QuadOptions()):
    """f(r) - f(r_ref) by adaptive quadrature of the closed-form f'.

    Both limits must lie in the closed domain; a limit on the boundary is
    accepted when the integral converges there, with a power substitution
    absorbing algebraic blow-up of f'.  Raises QuadratureError on divergence
    or when the tolerance is not met.
    """
    lo, hi = profile.domain
    r_arr = np.asarray(r, dtype=float)
    pts = np.concatenate([np.atleast_1d(r_arr).ravel(), [float(r_ref)]])
    if np.any(pts < lo) or np.any(pts > hi) or not np.all(np.isfinite(pts)):
        raise DomainError(f"integration limits {pts} outside the closed domain [{lo}, {hi}]")
    out = np.array([_integral(profile, float(r_ref), float(x), quad) for x in np.atleast_1d(r_arr).ravel()])
    out = out.reshape(r_arr.shape)
    return float(out) if out.ndim == 0 else out
