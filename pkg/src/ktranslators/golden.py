"""Elementary antiderivatives of f' for the parameter cases that admit them.

Each entry is an antiderivative G of the + branch; the evaluator returned by
:func:`golden_closed_form` is sign * (G(r) - G(r_ref)), which is the same
normalisation :func:`integrate_f` uses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .surface import Family

_TOL = 1e-12


def _close(x: float, y: float) -> bool:
    return abs(x - y) <= _TOL * max(1.0, abs(y))


def _atan_form(r, k):
    # integral of sqrt(k - r^2)
    s = np.sqrt(k - r * r)
    return 0.5 * (r * s + k * np.arctan(r / s))


def _log_form(r, k):
    # integral of sqrt(r^2 + k)
    s = np.sqrt(r * r + k)
    return 0.5 * (r * s + k * np.log(r + s))


@dataclass(frozen=True)
class GoldenForm:
    name: str
    antiderivative: Callable

    def __call__(self, r):
        return self.antiderivative(np.asarray(r, dtype=float))


def _lookup(family: Family, alpha: float, m: float) -> GoldenForm | None:
    if _close(alpha, 0.25):
        if family is Family.TA_S and m < 1:
            return GoldenForm("atan form, k = 1 - m", lambda r: _atan_form(r, 1 - m))
        if family is Family.TA_T and m > 0:
            return GoldenForm("atan form, k = 1 + m", lambda r: _atan_form(r, 1 + m))
        if family is Family.SA_S:
            return GoldenForm("log form, k = 1 + m", lambda r: _log_form(r, 1 + m))
        if family is Family.SA_T1 and m > 0:
            return GoldenForm("log form, k = 1 - m", lambda r: _log_form(r, 1 - m))
        if family is Family.SA_T2:
            return GoldenForm("log form, k = m - 1", lambda r: _log_form(r, m - 1))
        if family is Family.LA_S:
            return GoldenForm("cubic 4r^3/3 + m r", lambda r: 4 * r**3 / 3 + m * r)
        if family is Family.LA_T and m > 0:
            return GoldenForm("cubic 4r^3/3 - m r", lambda r: 4 * r**3 / 3 - m * r)
    if family is Family.TA_S and m == 0:
        if _close(alpha, 1 / 6):
            return GoldenForm(
                "alpha = 1/6 power form", lambda r: -(math.sqrt(2) / 3) * (1 - math.sqrt(2) * r) ** 1.5
            )
        if _close(alpha, 0.1):
            return GoldenForm(
                "alpha = 1/10 radical form",
                lambda r: (2 / 15) * np.sqrt(1 - np.sqrt(2 * r)) * (6 * r - np.sqrt(2 * r) - 2),
            )
    if family is Family.LA_S:
        if alpha == 1.0 and m > 0:
            return GoldenForm(
                "alpha = 1 atanh form",
                lambda r: math.sqrt(2) * np.arctanh(math.sqrt(2) * r / math.sqrt(m)) / (4 * m**1.5)
                + r / (2 * m * m - 4 * m * r * r),
            )
        if m == 0 and 0 < alpha < 0.5:
            a = alpha
            coef = ((1 - 2 * a) / (1 + 2 * a)) * (2 * (1 - 2 * a) / a) ** (2 * a / (1 - 2 * a))
            return GoldenForm("m = 0 power form", lambda r: coef * r ** ((1 + 2 * a) / (1 - 2 * a)))
    return None


def golden_closed_form(family, alpha: float, m: float, sign: str = "+", r_ref: float | None = None):
    """Exact evaluator r -> f(r) - f(r_ref) for a cataloged case, else None.

    With r_ref omitted the profile's default anchor is used.
    """
    family = Family.parse(family)
    form = _lookup(family, float(alpha), float(m))
    if form is None:
        return None
    if r_ref is None:
        from .profiles import make_profile

        r_ref = make_profile(family, alpha, m, sign).r_ref
    s = 1.0 if sign == "+" else -1.0
    g0 = float(form(r_ref))

    def f(r):
        out = s * (form(r) - g0)
        return float(out) if np.ndim(out) == 0 else out

    f.form = form
    return f


def remark_alpha_one_curve(r):
    """sqrt(r^2 - 4) - sqrt(2) atan(sqrt(r^2 - 4)/sqrt(2)) for r > 2.

    Its derivative r sqrt(r^2 - 4)/(r^2 - 2) equals the formal TA-S, alpha = 1,
    m = 1 expression for f'; there the base 1 - r^2/2 is negative, h < 0 and
    the resulting surface has K < 0, so this curve is kept out of the profile
    catalog and only checked against quadrature of that formal f'.
    """
    r = np.asarray(r, dtype=float)
    s = np.sqrt(r * r - 4)
    return s - math.sqrt(2) * np.arctan(s / math.sqrt(2))


def remark_alpha_one_fprime(r):
    r = np.asarray(r, dtype=float)
    return np.sqrt(1 - 1 / (1 - r * r / 2) ** 2)
