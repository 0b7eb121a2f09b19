"""Modulus-of-convexity estimation and second-order fitting.

The modulus at chord length eps is the largest delta such that the midpoint
of every chord of that length carries an inscribed ball of radius delta.  For
convex bodies the worst chords have both endpoints on the boundary, so the
estimator parametrizes the boundary radially on an angle grid, locates the
chords of the requested length and minimizes the midpoint's inscribed radius.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .bodies import (
    DEFAULT_GRID_ND,
    ConvexBody,
    angle_grid,
    default_grid,
    grid_angle_error,
    sphere_grid_angle,
    steiner_point,
)
from .errors import NotUniformlyConvexError, OutOfDomainError

_CHUNK = 512


def ball_modulus(r: float, eps: float) -> float:
    """Exact modulus of a radius-r ball: r - sqrt(r^2 - eps^2/4)."""
    if r <= 0.0:
        raise OutOfDomainError("radius must be positive")
    if eps < 0.0 or eps >= 2.0 * r:
        raise OutOfDomainError(f"eps must lie in [0, 2r) = [0, {2 * r})")
    return r - math.sqrt(r * r - 0.25 * eps * eps)


def lens_modulus_bound(R: float, t: float) -> float:
    """Guaranteed modulus lower bound R - sqrt(R^2 - t^2/4) for radius-R bodies."""
    return ball_modulus(R, t)


@dataclass(frozen=True)
class ModulusSample:
    eps: float
    delta: float
    error_bound: float


@dataclass(frozen=True)
class ModulusCurve:
    """Sampled modulus values (eps strictly increasing) for one body."""

    samples: tuple[ModulusSample, ...]
    body_id: str = "body"

    def __post_init__(self):
        e = self.eps
        if len(e) and (np.any(np.diff(e) <= 0.0) or e[0] <= 0.0):
            raise ValueError("eps values must be positive and strictly increasing")
        if np.any(self.delta < -self.error_bound - 1e-15):
            raise ValueError("delta below -error_bound; estimator output inconsistent")

    @property
    def eps(self) -> np.ndarray:
        return np.array([s.eps for s in self.samples])

    @property
    def delta(self) -> np.ndarray:
        return np.array([s.delta for s in self.samples])

    @property
    def error_bound(self) -> np.ndarray:
        return np.array([s.error_bound for s in self.samples])

    @classmethod
    def from_arrays(cls, eps, delta, error_bound, body_id="body") -> "ModulusCurve":
        samples = tuple(
            ModulusSample(float(e), float(d), float(b))
            for e, d, b in zip(eps, delta, error_bound)
        )
        return cls(samples=samples, body_id=body_id)


@dataclass(frozen=True)
class SecondOrderFit:
    """Second-order constant of delta(eps) ~ C eps^2 near zero."""

    C: float
    window: tuple[float, float]
    residual: float


def _radial_extents(grid: np.ndarray, numer: np.ndarray, rays: np.ndarray) -> np.ndarray:
    """Distance along each ray direction to the supporting-half-space boundary.

    T(u) = min over grid directions p with (p, u) > 0 of slack(p) / (p, u);
    computed as 1/max over all p of (p, u)/slack(p), valid because some dot is
    always positive and nonpositive dots cannot attain the maximum.
    """
    w = grid / np.maximum(numer, 1e-300)[:, None]
    inv = np.empty(len(rays))
    for k0 in range(0, len(rays), _CHUNK):
        inv[k0:k0 + _CHUNK] = (w @ rays[k0:k0 + _CHUNK].T).max(axis=0)
    return 1.0 / inv


class BoundaryParam:
    """Radial boundary parametrization of a planar convex body on an angle grid.

    Boundary points are the radial hits of the body's supporting-half-space
    intersection, so flat faces are traced as well as strictly convex arcs.
    """

    def __init__(self, body: ConvexBody, resolution: int):
        if resolution < 16:
            raise ValueError("resolution must be at least 16")
        if body.dim != 2:
            raise ValueError("BoundaryParam is planar; use sections for d >= 3")
        self.body = body
        self.n = int(resolution)
        self.grid = angle_grid(self.n)
        self.support = body.support_values(self.grid)
        self.origin = steiner_point(body)
        self.diameter = body.diameter(self.grid)
        numer = self.support - self.grid @ self.origin
        if np.min(numer) < -1e-12 * (1.0 + self.diameter):
            raise ValueError("reference point is not interior to the body")
        self.radial = _radial_extents(self.grid, numer, self.grid)
        self.points = self.origin + self.radial[:, None] * self.grid

    def inscribed_radii(self, pts: np.ndarray) -> np.ndarray:
        """Grid-supported inscribed-ball radius for each query point."""
        out = np.empty(len(pts))
        for k0 in range(0, len(pts), _CHUNK):
            gaps = self.support[None, :] - pts[k0:k0 + _CHUNK] @ self.grid.T
            out[k0:k0 + _CHUNK] = gaps.min(axis=1)
        return out


def _chords_of_length(points: np.ndarray, eps: float):
    """Anchor points and companion points at chord length eps on a closed polyline.

    Brackets every sign change of the chordal distance along the boundary and
    refines it by bisection on the bracketing boundary segment.
    """
    n = len(points)
    anchors = []
    seg_lo = []
    # float32 is enough to bracket the crossings; refinement below is float64
    pts32 = points.astype(np.float32)
    sq32 = np.einsum("ij,ij->i", pts32, pts32)
    eps2 = np.float32(eps * eps)
    for k0 in range(0, n, _CHUNK):
        A = pts32[k0:k0 + _CHUNK]
        d2 = sq32[k0:k0 + _CHUNK, None] + sq32[None, :] - 2.0 * (A @ pts32.T)
        below = d2 <= eps2
        cross = below != np.roll(below, -1, axis=1)
        rows, cols = np.nonzero(cross)
        rows = rows + k0
        forward = (cols - rows) % n <= n // 2  # drop the mirror copy of each chord
        anchors.append(rows[forward])
        seg_lo.append(cols[forward])
    anchors = np.concatenate(anchors)
    if len(anchors) == 0:
        return None
    cols = np.concatenate(seg_lo)
    a_pts = points[anchors]
    p0 = points[cols]
    p1 = points[(cols + 1) % n]
    lo = np.zeros(len(anchors))
    hi = np.ones(len(anchors))
    f_lo = np.linalg.norm(a_pts - p0, axis=1) - eps
    for _ in range(50):
        mid = 0.5 * (lo + hi)
        f_mid = np.linalg.norm(a_pts - (p0 + mid[:, None] * (p1 - p0)), axis=1) - eps
        same = np.sign(f_mid) == np.sign(f_lo)
        lo = np.where(same, mid, lo)
        f_lo = np.where(same, f_mid, f_lo)
        hi = np.where(same, hi, mid)
    t = 0.5 * (lo + hi)
    companions = p0 + t[:, None] * (p1 - p0)
    return a_pts, companions


def _planar_estimate(param: BoundaryParam, eps: float) -> float:
    found = _chords_of_length(param.points, eps)
    if found is None:
        raise OutOfDomainError(f"no boundary chord of length {eps}")
    a_pts, companions = found
    mids = 0.5 * (a_pts + companions)
    return float(param.inscribed_radii(mids).min())


def _section_points(body, origin, u, v, support, grid, resolution):
    # radial parametrization of the planar section span{u, v} + origin
    t = np.arange(resolution) * (2.0 * np.pi / resolution)
    U = np.outer(np.cos(t), u) + np.outer(np.sin(t), v)
    numer = support - grid @ origin
    T = _radial_extents(grid, numer, U)
    return origin + T[:, None] * U


def _worst_curvature_directions(body, grid, support, n_take: int, seed: int):
    # flatness probe: larger osculating radius <=> slower support-point turn
    rng = np.random.default_rng(seed)
    probe = grid[:: max(1, len(grid) // 256)]
    pts = body.support_points(probe)
    phi = 1e-2
    scores = []
    for p, x in zip(probe, pts):
        w = rng.standard_normal(body.dim)
        w -= (w @ p) * p
        w /= np.linalg.norm(w)
        q = p * math.cos(phi) + w * math.sin(phi)
        rho = 2.0 * (body.support_value(q) - float(q @ x)) / phi**2
        scores.append((rho, p, w))
    scores.sort(key=lambda s: -s[0])
    return scores[:n_take]


def _sectioned_estimate(body, eps, resolution, sections, seed) -> float:
    grid = default_grid(body.dim)
    support = body.support_values(grid)
    origin = steiner_point(body)
    rng = np.random.default_rng(seed)
    worst = _worst_curvature_directions(body, grid, support, max(1, sections // 2), seed)
    planes = []
    for _, p, w in worst:
        x_p = body.support_point(p)
        u = x_p - origin
        nu = np.linalg.norm(u)
        u = u / nu if nu > 1e-12 else p
        v = w - (w @ u) * u
        v /= np.linalg.norm(v)
        planes.append((u, v))
    while len(planes) < sections:
        u = rng.standard_normal(body.dim)
        u /= np.linalg.norm(u)
        v = rng.standard_normal(body.dim)
        v -= (v @ u) * u
        v /= np.linalg.norm(v)
        planes.append((u, v))
    best = np.inf
    for u, v in planes:
        pts = _section_points(body, origin, u, v, support, grid, resolution)
        found = _chords_of_length(pts, eps)
        if found is None:
            continue
        a_pts, comps = found
        mids = 0.5 * (a_pts + comps)
        for k0 in range(0, len(mids), _CHUNK):
            gaps = support[None, :] - mids[k0:k0 + _CHUNK] @ grid.T
            best = min(best, float(gaps.min()))
    if not np.isfinite(best):
        raise OutOfDomainError(f"no section chord of length {eps}")
    return best


def estimate_modulus(
    body: ConvexBody,
    eps: float,
    resolution: int = 2048,
    *,
    param: BoundaryParam | None = None,
    sections: int = 8,
    seed: int = 0,
) -> tuple[float, float]:
    """Estimated modulus delta(eps) and its grid error bound.

    Planar bodies get the full boundary scan; higher dimensions are sampled on
    planar central sections through the flattest support directions, which is
    a lower-confidence estimate (the error bound is inflated accordingly).
    """
    if resolution < 16:
        raise ValueError("resolution must be at least 16")
    diam = param.diameter if param is not None else body.diameter()
    if not 0.0 < eps < diam:
        raise OutOfDomainError(f"eps must lie in (0, diam) = (0, {diam})")
    if eps > 0.95 * diam:
        warnings.warn("modulus estimate near the diameter is noisy", stacklevel=2)
    if body.dim == 2:
        if param is None:
            param = BoundaryParam(body, resolution)
        delta = _planar_estimate(param, eps)
        return delta, grid_angle_error(diam, param.n)
    delta = _sectioned_estimate(body, eps, resolution, sections, seed)
    # the sphere grid's facet sagitta dominates the sectioned estimate
    theta = sphere_grid_angle(DEFAULT_GRID_ND, body.dim)
    return delta, 0.75 * diam * theta**2


def modulus_curve(
    body: ConvexBody,
    eps_values,
    resolution: int = 2048,
    body_id: str = "body",
    **kwargs,
) -> ModulusCurve:
    """Scan the modulus over an increasing eps grid, reusing one boundary model."""
    eps_values = np.asarray(eps_values, dtype=float)
    param = BoundaryParam(body, resolution) if body.dim == 2 else None
    rows = []
    for eps in eps_values:
        delta, bound = estimate_modulus(
            body, float(eps), resolution, param=param, **kwargs)
        rows.append((float(eps), delta, bound))
    return ModulusCurve.from_arrays(
        [r[0] for r in rows], [r[1] for r in rows], [r[2] for r in rows], body_id)


def default_fit_window(curve: ModulusCurve) -> tuple[float, float]:
    """Window [0.02, 0.2] x (implied curvature radius) from the smallest sample."""
    eps = curve.eps
    delta = curve.delta
    bound = curve.error_bound
    usable = delta > bound
    if not np.any(usable):
        raise NotUniformlyConvexError(
            "no sample exceeds its error bound; modulus not certifiably positive")
    k = int(np.argmax(usable))
    scale = eps[k] ** 2 / (8.0 * delta[k])
    return 0.02 * scale, 0.2 * scale


def fit_second_order(curve: ModulusCurve, window: tuple[float, float] | None = None) -> SecondOrderFit:
    """Least-squares fit of delta/eps^2 against eps, extrapolated to eps = 0.

    Raises NotUniformlyConvexError when windowed samples do not rise above
    their error bounds (zero modulus cannot be told apart from noise) or when
    the extrapolated constant is nonpositive.
    """
    eps = curve.eps
    delta = curve.delta
    bound = curve.error_bound
    auto = window is None
    if auto:
        window = default_fit_window(curve)
    lo, hi = window
    mask = (eps >= lo) & (eps <= hi)
    if mask.sum() < 4:
        if not auto:
            raise ValueError("fit window must contain at least 4 samples")
        order = np.argsort(eps)
        mask = np.zeros(len(eps), dtype=bool)
        mask[order[:4]] = True
        window = (float(eps[mask].min()), float(eps[mask].max()))
    if np.any(delta[mask] <= bound[mask]):
        raise NotUniformlyConvexError(
            "windowed modulus samples do not exceed their error bounds")
    x = eps[mask]
    y = delta[mask] / x**2
    slope, intercept = np.polyfit(x, y, 1)
    residual = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    C = float(intercept)
    if C <= 0.0:
        raise NotUniformlyConvexError(f"fitted second-order constant {C} is not positive")
    return SecondOrderFit(C=C, window=(float(window[0]), float(window[1])), residual=residual)
