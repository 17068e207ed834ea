"""Spacelike/timelike extensions across a degenerate boundary circle.

For 0 < alpha < 1/2 a timelike profile with constant m_t > 0 ends at a
radius where the metric degenerates, and the spacelike profile of the same
axis type with constant -m_t starts at exactly that radius.  The two pieces
are joined there, each re-anchored so that f(r_j) = 0.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InadmissibleError
from .profiles import Profile, QuadOptions
from .surface import Family

# timelike family -> spacelike partner
PAIRS = {Family.TA_T: Family.TA_S, Family.SA_T1: Family.SA_S, Family.LA_T: Family.LA_S}
PAIR_NAMES = {"TA": (Family.TA_T, Family.TA_S), "SA": (Family.SA_T1, Family.SA_S), "LA": (Family.LA_T, Family.LA_S)}
DELTAS = (1e-2, 1e-3, 1e-4)


def junction_radius(pair: str, alpha: float, m_t: float) -> float:
    """Degenerate radius shared by the pair; m_t is the timelike constant."""
    if pair == "LA":
        return math.sqrt(alpha * m_t / (2 * (1 - 2 * alpha)))
    return math.sqrt(2 * alpha * m_t / (1 - 2 * alpha))


def _pair_of(a: Family, b: Family):
    for name, (t, s) in PAIR_NAMES.items():
        if {a, b} == {t, s}:
            return name
    return None


@dataclass(frozen=True)
class GluedCurve:
    """Timelike piece on (r_lo, r_j), spacelike piece on (r_j, r_hi)."""

    pair: str
    left: Profile
    right: Profile
    r_j: float
    endpoint_mismatch: float
    m_mismatch: float

    @property
    def domain(self) -> tuple[float, float]:
        return (self.left.domain[0], self.right.domain[1])

    @property
    def alpha(self) -> float:
        return self.left.alpha

    def piece(self, r: float) -> str:
        if r < self.r_j:
            return "left"
        if r > self.r_j:
            return "right"
        return "junction"

    def f(self, r, quad: QuadOptions = QuadOptions()):
        r = np.asarray(r, dtype=float)
        out = np.zeros_like(r)
        lm, rm = r < self.r_j, r > self.r_j
        if np.any(lm):
            out[lm] = self.left.f(r[lm], quad)
        if np.any(rm):
            out[rm] = self.right.f(r[rm], quad)
        return float(out) if out.ndim == 0 else out

    def fprime(self, r):
        r = np.asarray(r, dtype=float)
        if np.any(r == self.r_j):
            raise DomainError("f' is only defined as one-sided limits at the junction")
        out = np.zeros_like(r)
        lm, rm = r < self.r_j, r > self.r_j
        if np.any(lm):
            out[lm] = self.left.fprime(r[lm])
        if np.any(rm):
            out[rm] = self.right.fprime(r[rm])
        return float(out) if out.ndim == 0 else out

    def junction_fprime(self) -> float:
        """Common one-sided limit of f' at r_j: +-1, or 0 on the lightlike pair."""
        if self.pair == "LA":
            return 0.0
        return self.left.branch

    def diagnostics(self, deltas=DELTAS) -> dict:
        rows = []
        for d in deltas:
            fl = self.left.f(self.r_j - d)
            fr = self.right.f(self.r_j + d)
            pl = self.left.fprime(self.r_j - d)
            pr = self.right.fprime(self.r_j + d)
            rows.append(
                {
                    "delta": d,
                    "continuity": abs(fl - fr),
                    "fprime_left": pl,
                    "fprime_right": pr,
                    "fprime_sq_gap": abs(pl * pl - pr * pr),
                }
            )
        return {
            "r_j": self.r_j,
            "endpoint_mismatch": self.endpoint_mismatch,
            "m_mismatch": self.m_mismatch,
            "one_sided": rows,
        }

    def sample(self, n: int = 50, inset: float = 0.02, span: float = 1.0):
        """Rows (r, f, fprime, piece) on both sides with the junction row between."""
        if n < 2:
            raise ValueError("need at least 2 samples per piece")
        lo, hi = self.domain
        hi = min(hi, self.r_j + span)
        wl, wr = self.r_j - lo, hi - self.r_j
        rl = np.linspace(lo + inset * wl, self.r_j - inset * wl, n)
        rr = np.linspace(self.r_j + inset * wr, hi - inset * wr, n)
        rows = [(float(r), float(f), float(p), "left") for r, f, p in zip(rl, self.left.f(rl), self.left.fprime(rl))]
        rows.append((self.r_j, 0.0, self.junction_fprime(), "junction"))
        rows += [(float(r), float(f), float(p), "right") for r, f, p in zip(rr, self.right.f(rr), self.right.fprime(rr))]
        return rows

    def descriptor(self) -> dict:
        lo, hi = self.domain
        return {
            "pair": self.pair,
            "left": self.left.descriptor(),
            "right": self.right.descriptor(),
            "r_j": self.r_j,
            "domain": [lo, "inf" if math.isinf(hi) else hi],
        }

    def to_json(self) -> str:
        return json.dumps(self.descriptor())


def glue(a: Profile, b: Profile, tol: float = 1e-10) -> GluedCurve:
    """Join a timelike profile and its reverse-signed spacelike partner.

    The arguments may come in either order.  Raises InadmissibleError for a
    wrong family pair, alpha outside (0, 1/2), a sign or constant mismatch,
    or endpoints that do not meet within tol.
    """
    pair = _pair_of(a.family, b.family)
    if pair is None:
        raise InadmissibleError(
            f"cannot glue {a.family.value} to {b.family.value}; admissible pairs are "
            "TA-T/TA-S, SA-T1/SA-S and LA-T/LA-S"
        )
    if a.alpha != b.alpha:
        raise InadmissibleError(f"pieces have different alpha ({a.alpha!r} vs {b.alpha!r})")
    if not 0 < a.alpha < 0.5:
        raise InadmissibleError(f"gluing needs alpha in (0, 1/2), got {a.alpha!r}")
    timelike, spacelike = (a, b) if a.family in PAIRS else (b, a)
    if timelike.sign != spacelike.sign:
        raise InadmissibleError("pieces must use the same branch sign")
    m_t = timelike.m
    if m_t <= 0:
        raise InadmissibleError(f"timelike piece needs m > 0, got {m_t!r}")
    m_mis = abs(spacelike.m + m_t)
    if m_mis > tol * max(1.0, abs(m_t)):
        raise InadmissibleError(
            f"constants must be reverse-signed: m_spacelike = {spacelike.m!r} but -m_timelike = {-m_t!r}"
        )
    t_hi = timelike.domain[1]
    s_lo = spacelike.domain[0]
    mis = abs(t_hi - s_lo)
    if mis > tol * max(1.0, t_hi):
        raise InadmissibleError(f"endpoints do not meet: {t_hi!r} vs {s_lo!r}")
    r_j = junction_radius(pair, timelike.alpha, m_t)
    left = Profile(timelike.family, timelike.alpha, m_t, timelike.sign, t_hi)
    right = Profile(spacelike.family, spacelike.alpha, spacelike.m, spacelike.sign, s_lo)
    return GluedCurve(pair, left, right, r_j, mis, m_mis)


def glue_pair(pair: str, alpha: float, m_t: float, m_s: float | None = None, sign: str = "+", tol: float = 1e-10) -> GluedCurve:
    """Build and glue the named pair; m_s defaults to -m_t."""
    pair = pair.upper()
    if pair not in PAIR_NAMES:
        raise InadmissibleError(f"pair must be one of {sorted(PAIR_NAMES)}")
    if not 0 < alpha < 0.5:
        raise InadmissibleError(f"gluing needs alpha in (0, 1/2), got {alpha!r}")
    t_fam, s_fam = PAIR_NAMES[pair]
    m_s = -m_t if m_s is None else m_s
    return glue(Profile(t_fam, alpha, m_t, sign), Profile(s_fam, alpha, m_s, sign), tol)
