"""Convex-body oracles: supporting functions, support points, membership.

A body is represented by its supporting function s(p) = sup over the body of
the inner product (p, x), together with one maximizer ("support point") per
direction.  Closed forms are provided for balls, ellipsoids, finite point
hulls and Minkowski sums; everything else in the library consumes bodies only
through this oracle interface.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyBodyError, EmptyInputError, OutsideBodyError

DEFAULT_GRID_2D = 4096
DEFAULT_GRID_ND = 20000
UNIT_TOL = 1e-12
ORTHO_TOL = 1e-10


def as_vector(x) -> np.ndarray:
    """Coerce to a finite 1-D float array of length >= 2."""
    v = np.array(x, dtype=float)
    if v.ndim != 1 or v.size < 2:
        raise ValueError(f"expected a vector of dimension >= 2, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector has non-finite entries")
    return v


def _frozen(a: np.ndarray) -> np.ndarray:
    """Mark an array read-only; body values are immutable after construction."""
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


def unit(v) -> np.ndarray:
    """Normalize a nonzero vector to unit length."""
    v = as_vector(v)
    n = float(np.linalg.norm(v))
    if n == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return v / n


def as_direction(p) -> np.ndarray:
    """Validate a unit direction (norm 1 within 1e-12)."""
    p = as_vector(p)
    if abs(float(np.linalg.norm(p)) - 1.0) > UNIT_TOL:
        raise ValueError("direction must have unit norm (within 1e-12)")
    return p


def angle_grid(n: int = DEFAULT_GRID_2D) -> np.ndarray:
    """(n, 2) unit directions at uniformly spaced angles, starting at angle 0."""
    t = np.arange(n) * (2.0 * np.pi / n)
    return np.stack([np.cos(t), np.sin(t)], axis=1)


def sphere_grid(n: int = DEFAULT_GRID_ND, dim: int = 3, seed: int = 0) -> np.ndarray:
    """(n, dim) deterministic low-discrepancy unit directions for dim >= 3.

    Sobol points are pushed through the inverse normal CDF and normalized,
    which distributes them uniformly on the sphere.
    """
    from scipy.special import ndtri
    from scipy.stats import qmc

    sampler = qmc.Sobol(d=dim, scramble=True, seed=seed)
    u = sampler.random_base2(max(1, math.ceil(math.log2(n))))[:n]
    g = ndtri(np.clip(u, 1e-12, 1.0 - 1e-12))
    norms = np.linalg.norm(g, axis=1)
    norms[norms == 0.0] = 1.0
    return g / norms[:, None]


def sphere_grid_angle(n: int, dim: int) -> float:
    """Typical angular spacing of an n-point grid on the (dim-1)-sphere."""
    if dim == 2:
        return 2.0 * np.pi / n
    area = 2.0 * np.pi ** (dim / 2.0) / math.gamma(dim / 2.0)
    return float((area / n) ** (1.0 / (dim - 1)))


def default_grid(dim: int, n: int | None = None) -> np.ndarray:
    """Direction grid for the given dimension (uniform angles in 2-D, Sobol else)."""
    if dim == 2:
        return angle_grid(n or DEFAULT_GRID_2D)
    return sphere_grid(n or DEFAULT_GRID_ND, dim)


def grid_angle_error(diameter: float, n: int) -> float:
    """Second-order support error bound for an n-point angular grid."""
    return 0.5 * diameter * (np.pi / n) ** 2


@dataclass(frozen=True)
class SupportEval:
    """Support value s(p) together with one maximizing point of the body."""

    value: float
    point: np.ndarray


def _lex_smallest(points: np.ndarray) -> np.ndarray:
    """Lexicographically smallest row, used as a deterministic tie-break."""
    order = np.lexsort(points.T[::-1])
    return points[order[0]]


class ConvexBody:
    """Oracle interface: support values / support points for a compact convex set."""

    @property
    def dim(self) -> int:
        raise NotImplementedError

    def support_value(self, p) -> float:
        """s(p) for a single (possibly unnormalized, nonzero) direction p."""
        p = np.atleast_2d(np.asarray(p, dtype=float))
        return float(self.support_values(p)[0])

    def support_values(self, P: np.ndarray) -> np.ndarray:
        """s(p) for every row p of P, shape (n,)."""
        raise NotImplementedError

    def support_point(self, p) -> np.ndarray:
        """One maximizer of (p, .) over the body."""
        p = np.atleast_2d(np.asarray(p, dtype=float))
        return self.support_points(p)[0]

    def support_points(self, P: np.ndarray) -> np.ndarray:
        """One support point per row of P, shape (n, dim)."""
        raise NotImplementedError

    def diameter(self, grid: np.ndarray | None = None) -> float:
        """sup of pairwise distances, here bounded via antipodal support sums."""
        if grid is None:
            grid = default_grid(self.dim)
        s = self.support_values(grid)
        s_neg = self.support_values(-grid)
        return float(np.max(s + s_neg))

    def contains(self, x, tol: float = 0.0, grid: np.ndarray | None = None) -> bool:
        """Membership via supporting half-spaces on a direction grid."""
        x = as_vector(x)
        if grid is None:
            grid = default_grid(self.dim)
        gaps = grid @ x - self.support_values(grid)
        return bool(np.max(gaps) <= tol)

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))


class Ball(ConvexBody):
    """Closed ball of positive radius."""

    def __init__(self, center, radius: float):
        self.center = _frozen(as_vector(center))
        self.radius = float(radius)
        if not self.radius > 0.0:
            raise ValueError("ball radius must be positive")

    @property
    def dim(self) -> int:
        return self.center.size

    def support_values(self, P):
        return P @ self.center + self.radius * np.linalg.norm(P, axis=1)

    def support_points(self, P):
        norms = np.linalg.norm(P, axis=1)
        if np.any(norms == 0.0):
            raise ValueError("support point undefined for the zero direction")
        return self.center + self.radius * P / norms[:, None]

    def diameter(self, grid=None) -> float:
        return 2.0 * self.radius

    def contains(self, x, tol: float = 0.0, grid=None) -> bool:
        x = as_vector(x)
        return float(np.linalg.norm(x - self.center)) <= self.radius + tol

    def __repr__(self):
        return f"Ball(center={self.center.tolist()}, radius={self.radius})"

    def _key(self):
        return (self.center.tobytes(), self.radius)


class Ellipsoid(ConvexBody):
    """Rotated axis-aligned ellipsoid; semi-axes sorted in decreasing order."""

    def __init__(self, center, semi_axes, rotation=None):
        self.center = as_vector(center)
        self.semi_axes = np.asarray(semi_axes, dtype=float)
        d = self.center.size
        if self.semi_axes.shape != (d,):
            raise ValueError("semi_axes must match the center dimension")
        if not np.all(self.semi_axes > 0.0):
            raise ValueError("semi-axes must be positive")
        if np.any(np.diff(self.semi_axes) > 0.0):
            raise ValueError("semi-axes must be sorted in decreasing order")
        if rotation is None:
            rotation = np.eye(d)
        self.rotation = np.asarray(rotation, dtype=float)
        if self.rotation.shape != (d, d):
            raise ValueError("rotation must be a d x d matrix")
        if np.max(np.abs(self.rotation.T @ self.rotation - np.eye(d))) > ORTHO_TOL:
            raise ValueError("rotation must be orthogonal (within 1e-10)")
        self.center = _frozen(self.center)
        self.semi_axes = _frozen(self.semi_axes)
        self.rotation = _frozen(self.rotation)

    @property
    def dim(self) -> int:
        return self.center.size

    def _body_frame(self, P):
        # q = diag(axes) R^T p; then s = (p,c) + ||q||, point = c + R diag(axes) q/||q||
        return (P @ self.rotation) * self.semi_axes

    def support_values(self, P):
        q = self._body_frame(P)
        return P @ self.center + np.linalg.norm(q, axis=1)

    def support_points(self, P):
        q = self._body_frame(P)
        norms = np.linalg.norm(q, axis=1)
        if np.any(norms == 0.0):
            raise ValueError("support point undefined for the zero direction")
        u = q / norms[:, None]
        return self.center + (u * self.semi_axes) @ self.rotation.T

    def diameter(self, grid=None) -> float:
        return 2.0 * float(self.semi_axes[0])

    def contains(self, x, tol: float = 0.0, grid=None) -> bool:
        # Exact gauge test; tol (a Euclidean slack) is mapped conservatively
        # through the Lipschitz constant 1/min-axis of the gauge.
        x = as_vector(x)
        y = (self.rotation.T @ (x - self.center)) / self.semi_axes
        return float(np.linalg.norm(y)) <= 1.0 + tol / float(self.semi_axes[-1])

    def __repr__(self):
        return f"Ellipsoid(center={self.center.tolist()}, semi_axes={self.semi_axes.tolist()})"

    def _key(self):
        return (self.center.tobytes(), self.semi_axes.tobytes(), self.rotation.tobytes())


class PointHull(ConvexBody):
    """Convex hull of a finite, nonempty point set (singletons allowed)."""

    def __init__(self, points):
        pts = np.asarray(points, dtype=float)
        if pts.ndim != 2 or pts.shape[0] == 0 or pts.shape[1] < 2:
            raise EmptyBodyError("point hull needs a nonempty (n, d>=2) point array")
        if not np.all(np.isfinite(pts)):
            raise ValueError("points have non-finite entries")
        self.points = _frozen(pts)

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def support_values(self, P):
        return np.max(P @ self.points.T, axis=1)

    def support_points(self, P):
        prods = P @ self.points.T
        best = np.max(prods, axis=1)
        out = np.empty((len(P), self.dim))
        scale = 1.0 + np.abs(best)
        for i in range(len(P)):
            # flat faces: break ties by the lexicographically smallest vertex
            ties = self.points[prods[i] >= best[i] - 1e-12 * scale[i]]
            out[i] = _lex_smallest(ties)
        return out

    def diameter(self, grid=None) -> float:
        if len(self.points) == 1:
            return 0.0
        d2 = np.sum((self.points[:, None, :] - self.points[None, :, :]) ** 2, axis=-1)
        return float(np.sqrt(d2.max()))

    def __repr__(self):
        return f"PointHull({len(self.points)} points, dim={self.dim})"

    def _key(self):
        return (self.points.tobytes(),)


class MinkowskiSum(ConvexBody):
    """Minkowski sum of component bodies; supports add, support points add."""

    def __init__(self, parts):
        parts = tuple(parts)
        if not parts:
            raise EmptyInputError("Minkowski sum needs at least one part")
        dims = {p.dim for p in parts}
        if len(dims) != 1:
            raise ValueError("all parts must share one dimension")
        self.parts = parts

    @property
    def dim(self) -> int:
        return self.parts[0].dim

    def support_values(self, P):
        total = np.zeros(len(P))
        for part in self.parts:
            total += part.support_values(P)
        return total

    def support_points(self, P):
        total = np.zeros((len(P), self.dim))
        for part in self.parts:
            total += part.support_points(P)
        return total

    def __repr__(self):
        return f"MinkowskiSum({list(self.parts)!r})"

    def _key(self):
        return tuple(p._key() for p in self.parts)


def support_eval(body: ConvexBody, p) -> SupportEval:
    """Exact support value and one support point in the unit direction p."""
    p = as_direction(p)
    P = p[None, :]
    value = float(body.support_values(P)[0])
    point = body.support_points(P)[0]
    return SupportEval(value=value, point=point)


def contains(body: ConvexBody, x, tol: float = 1e-9, grid: np.ndarray | None = None) -> bool:
    """True iff (p, x) <= s(p) + tol for every grid direction p.

    Ball and ellipsoid override this with their exact closed-form tests.
    """
    if tol < 0.0:
        raise ValueError("tol must be nonnegative")
    return body.contains(x, tol=tol, grid=grid)


def boundary_distance(body: ConvexBody, x, grid: np.ndarray | None = None) -> float:
    """Radius of the largest grid-supported ball centered at x inside the body."""
    x = as_vector(x)
    if grid is None:
        grid = default_grid(x.size)
    slack = float(np.min(body.support_values(grid) - grid @ x))
    scale = 1.0 + float(np.linalg.norm(x))
    if slack < -1e-9 * scale and not body.contains(x, tol=1e-9 * scale, grid=grid):
        raise OutsideBodyError(f"point {x.tolist()} lies outside the body")
    return slack


def minkowski_support(parts, p) -> float:
    """Sum of per-part support values; equals the support of the composite body."""
    parts = list(parts)
    if not parts:
        raise EmptyInputError("need at least one body")
    return MinkowskiSum(parts).support_value(np.asarray(p, dtype=float))


def support_curvature_radii(body: ConvexBody, n: int = DEFAULT_GRID_2D) -> np.ndarray:
    """Osculating-radius estimates h + h'' of a planar body from its support function."""
    if body.dim != 2:
        raise ValueError("curvature radii via support differences need a planar body")
    grid = angle_grid(n)
    h = body.support_values(grid)
    step = 2.0 * np.pi / n
    h_dd = (np.roll(h, -1) - 2.0 * h + np.roll(h, 1)) / step**2
    return h + h_dd


def steiner_point(body: ConvexBody, grid: np.ndarray | None = None) -> np.ndarray:
    """Average of support points over the grid; interior for full-dimensional bodies."""
    if grid is None:
        grid = default_grid(body.dim, 64 if body.dim == 2 else 512)
    return body.support_points(grid).mean(axis=0)
