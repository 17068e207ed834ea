"""Lorentzian linear algebra on R^3 with the metric dx^2 + dy^2 - dz^2."""

from __future__ import annotations

import enum
from typing import NamedTuple

import numpy as np


class MinkVec3(NamedTuple):
    """A vector of Minkowski 3-space in canonical coordinates."""

    x: float
    y: float
    z: float

    @classmethod
    def of(cls, x, y, z) -> "MinkVec3":
        vec = cls(float(x), float(y), float(z))
        if not all(np.isfinite(vec)):
            raise ValueError(f"non-finite component in {vec}")
        return vec


class CausalClass(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


def lorentz_inner(u, v):
    """Inner product <u, v> = u.x v.x + u.y v.y - u.z v.z.

    Accepts MinkVec3 values or arrays whose last axis has length 3; the
    result broadcasts like numpy arithmetic.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    out = u[..., 0] * v[..., 0] + u[..., 1] * v[..., 1] - u[..., 2] * v[..., 2]
    return float(out) if out.ndim == 0 else out


def causal_class(v, tol: float = 0.0) -> CausalClass:
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    q = lorentz_inner(v, v)
    if abs(q) <= tol:
        return CausalClass.LIGHTLIKE
    return CausalClass.SPACELIKE if q > 0 else CausalClass.TIMELIKE


def triple_det(a, b, c):
    """Euclidean determinant of the 3x3 matrix with columns a, b, c.

    Vectorised over leading axes.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    out = (
        a[..., 0] * (b[..., 1] * c[..., 2] - b[..., 2] * c[..., 1])
        - b[..., 0] * (a[..., 1] * c[..., 2] - a[..., 2] * c[..., 1])
        + c[..., 0] * (a[..., 1] * b[..., 2] - a[..., 2] * b[..., 1])
    )
    return float(out) if out.ndim == 0 else out
