"""Sampled curves and surface meshes, and their CSV/OBJ/JSON encodings.

Floats go out as Python's shortest round-trip repr (CSV, JSON) or with 17
significant digits (OBJ), so re-reading reproduces the same doubles.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .surface import gauss_curvature_analytic, parametrize
from .validator import GridSpec, residual_at

CURVE_HEADER = ("r", "f", "fprime", "fsecond", "K", "residual")
MESH_HEADER = ("r", "theta", "K", "residual")
GLUE_HEADER = ("r", "f", "fprime", "piece")


def fmt(x) -> str:
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return repr(x)


def jsonable(obj):
    """Replace infinities by the strings 'inf'/'-inf' for JSON output."""
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, float) and math.isinf(obj):
        return "inf" if obj > 0 else "-inf"
    return obj


def dumps(obj, indent: int | None = 2) -> str:
    return json.dumps(jsonable(obj), indent=indent, allow_nan=False)


def _write_rows(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([v if isinstance(v, str) else fmt(v) for v in row])
    return buf.getvalue()


def read_csv(text: str) -> dict[str, np.ndarray | list]:
    """Parse one of our CSV files back into columns (floats where possible)."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    cols = list(zip(*reader)) or [()] * len(header)
    out = {}
    for name, col in zip(header, cols):
        try:
            out[name] = np.array([float(v) for v in col])
        except ValueError:
            out[name] = list(col)
    return out


def sample_window(profile, n: int, inset: float | None, r_window=None, span: float = 1.0) -> np.ndarray:
    """n strictly interior sample radii.

    With an explicit window the inset defaults to 0; otherwise to 0.1 of the
    domain (truncated to ``span`` past r_lo when unbounded).
    """
    if n < 2:
        raise ValueError("sample count must be at least 2")
    lo, hi = profile.domain
    if r_window is not None:
        a, b = map(float, r_window)
        if not (lo < a < b < hi):
            raise DomainError(f"sampling window [{a}, {b}] exceeds the open domain ({lo}, {hi})")
        inset = 0.0 if inset is None else inset
    else:
        a, b = lo, (lo + span if math.isinf(hi) else hi)
        inset = 0.1 if inset is None else inset
    if not 0 <= inset < 0.5:
        raise ValueError("inset must lie in [0, 1/2)")
    w = b - a
    a, b = a + inset * w, b - inset * w
    if a <= lo or b >= hi:
        raise DomainError(f"samples [{a}, {b}] reach the domain ({lo}, {hi}) boundary; use a positive inset")
    return np.linspace(a, b, n)


@dataclass(frozen=True)
class SampledCurve:
    profile: dict
    r: np.ndarray
    f: np.ndarray
    fprime: np.ndarray
    fsecond: np.ndarray
    K: np.ndarray
    residual: np.ndarray

    def rows(self):
        return zip(self.r, self.f, self.fprime, self.fsecond, self.K, self.residual)

    def to_csv(self) -> str:
        return _write_rows(CURVE_HEADER, self.rows())


def sample_curve(profile, n: int = 100, inset: float | None = None, r_window=None) -> SampledCurve:
    r = sample_window(profile, n, inset, r_window)
    fp = profile.fprime(r)
    fs = profile.fsecond(r)
    K = gauss_curvature_analytic(profile.family, r, fp, fs, gap=profile.gap(r))
    res = residual_at(profile, r, np.zeros_like(r))
    return SampledCurve(profile.descriptor(), r, profile.f(r), fp, fs, K, res)


@dataclass(frozen=True)
class SurfaceMesh:
    vertices: np.ndarray  # (n_r * n_theta, 3)
    faces: np.ndarray  # (n_quads, 4), 0-based
    r: np.ndarray
    theta: np.ndarray
    K: np.ndarray
    residual: np.ndarray

    def to_obj(self) -> str:
        lines = [f"v {x:.17g} {y:.17g} {z:.17g}" for x, y, z in self.vertices]
        lines += ["f " + " ".join(str(i + 1) for i in face) for face in self.faces]
        return "\n".join(lines) + "\n"

    def sidecar_csv(self) -> str:
        return _write_rows(MESH_HEADER, zip(self.r, self.theta, self.K, self.residual))


def build_mesh(profile, grid: GridSpec) -> SurfaceMesh:
    rs = sample_window(profile, grid.n_r, grid.inset, grid.r_window)
    if grid.n_theta < 2:
        raise ValueError("mesh needs at least 2 angular samples")
    ts = grid.theta_values(profile.family)
    R, T = np.meshgrid(rs, ts, indexing="ij")
    F = np.broadcast_to(profile.f(rs)[:, None], R.shape)
    verts = parametrize(profile.family, F, R, T).reshape(-1, 3)
    fp = profile.fprime(R)
    K = gauss_curvature_analytic(profile.family, R, fp, profile.fsecond(R), gap=profile.gap(R))
    res = residual_at(profile, R, T)
    nt = len(ts)
    i, j = np.meshgrid(np.arange(len(rs) - 1), np.arange(nt - 1), indexing="ij")
    a = (i * nt + j).ravel()
    faces = np.stack([a, a + nt, a + nt + 1, a + 1], axis=-1)
    return SurfaceMesh(verts, faces, R.ravel(), T.ravel(), np.asarray(K).ravel(), np.asarray(res).ravel())


def read_obj(text: str):
    verts, faces = [], []
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "v":
            verts.append([float(p) for p in parts[1:4]])
        elif parts[0] == "f":
            faces.append([int(p) - 1 for p in parts[1:]])
    return np.array(verts), np.array(faces, dtype=int)


def glue_csv(rows) -> str:
    return _write_rows(GLUE_HEADER, rows)
