"""Exact planar convex regions bounded by circular arcs and segments.

Supports the boolean chain needed for ball hulls: equal-radius disk
intersections, two-point lenses, strongly convex hulls of point sets, and
Minkowski offsets by a disk.  All arcs are stored counterclockwise with
angular span below pi; polygons are closed convex chains of pieces sharing
endpoints.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bodies import ConvexBody, SupportEval, as_direction, as_vector, default_grid
from .errors import (
    EmptyInputError,
    GeometryError,
    NoEnclosingBallError,
    TooFarApartError,
)
from .seb import smallest_enclosing_circle

TWO_PI = 2.0 * math.pi
MAX_ARC_SPAN = math.pi * (1.0 - 1e-9)
MERGE_TOL = 1e-9


def _ang(v) -> float:
    return math.atan2(v[1], v[0]) % TWO_PI


def _e(t: float) -> np.ndarray:
    return np.array([math.cos(t), math.sin(t)])


@dataclass(frozen=True)
class Arc:
    """CCW circular arc; the region lies inside the circle (arc bulges outward)."""

    center: tuple[float, float]
    radius: float
    start_angle: float
    end_angle: float

    @property
    def span(self) -> float:
        return (self.end_angle - self.start_angle) % TWO_PI

    @property
    def start_point(self) -> np.ndarray:
        return np.asarray(self.center) + self.radius * _e(self.start_angle)

    @property
    def end_point(self) -> np.ndarray:
        return np.asarray(self.center) + self.radius * _e(self.end_angle)

    def point_at(self, frac: float) -> np.ndarray:
        t = self.start_angle + frac * self.span
        return np.asarray(self.center) + self.radius * _e(t)

    def length(self) -> float:
        return self.radius * self.span

    def contains_angle(self, phi: float, tol: float = 1e-12) -> bool:
        return (phi - self.start_angle) % TWO_PI <= self.span + tol


@dataclass(frozen=True)
class Seg:
    """Straight boundary piece from start to end (CCW orientation)."""

    start: tuple[float, float]
    end: tuple[float, float]

    @property
    def start_point(self) -> np.ndarray:
        return np.asarray(self.start)

    @property
    def end_point(self) -> np.ndarray:
        return np.asarray(self.end)

    def point_at(self, frac: float) -> np.ndarray:
        return (1.0 - frac) * self.start_point + frac * self.end_point

    def length(self) -> float:
        return float(np.linalg.norm(self.end_point - self.start_point))

    @property
    def normal_angle(self) -> float:
        d = self.end_point - self.start_point
        return _ang((d[1], -d[0]))


def _make_arc(center, radius: float, start: float, end: float) -> list[Arc]:
    """Arc pieces from start to end CCW, split so every span stays below pi."""
    c = (float(center[0]), float(center[1]))
    span = (end - start) % TWO_PI
    if span < 1e-15:
        return []
    n = max(1, int(math.ceil(span / MAX_ARC_SPAN)))
    out = []
    for i in range(n):
        a = (start + span * i / n) % TWO_PI
        b = (start + span * (i + 1) / n) % TWO_PI
        out.append(Arc(c, float(radius), a, b))
    return out


def _point_seg_dist(x: np.ndarray, s: Seg) -> float:
    v = s.end_point - s.start_point
    L2 = float(v @ v)
    if L2 == 0.0:
        return float(np.linalg.norm(x - s.start_point))
    t = float(np.clip((x - s.start_point) @ v / L2, 0.0, 1.0))
    return float(np.linalg.norm(x - (s.start_point + t * v)))


def _point_arc_dist(x: np.ndarray, a: Arc) -> float:
    c = np.asarray(a.center)
    rel = x - c
    phi = _ang(rel)
    if a.contains_angle(phi):
        return abs(float(np.linalg.norm(rel)) - a.radius)
    return min(float(np.linalg.norm(x - a.start_point)),
               float(np.linalg.norm(x - a.end_point)))


class ArcPolygon(ConvexBody):
    """Closed convex region bounded by arcs and segments; may be a single point."""

    def __init__(self, pieces, point=None):
        self.pieces = tuple(pieces)
        self._point = None if point is None else as_vector(point)
        if self._point is None and not self.pieces:
            raise GeometryError("an arc polygon needs boundary pieces or a point")
        if self.pieces:
            for a, b in zip(self.pieces, self.pieces[1:] + self.pieces[:1]):
                if np.linalg.norm(a.end_point - b.start_point) > 1e-7:
                    raise GeometryError("boundary pieces do not chain into a closed loop")
        self._interior = None

    @classmethod
    def singleton(cls, point) -> "ArcPolygon":
        return cls((), point=point)

    @classmethod
    def full_disk(cls, center, radius: float) -> "ArcPolygon":
        pieces = []
        for k in range(4):
            pieces += _make_arc(center, radius, k * math.pi / 2.0, (k + 1) * math.pi / 2.0)
        return cls(pieces)

    # -- basic geometry -----------------------------------------------------

    @property
    def is_singleton(self) -> bool:
        return not self.pieces

    @property
    def singleton_point(self) -> np.ndarray:
        if not self.is_singleton:
            raise GeometryError("polygon is not a single point")
        return self._point

    @property
    def dim(self) -> int:
        return 2

    def vertices(self) -> np.ndarray:
        if self.is_singleton:
            return self._point[None, :]
        return np.array([p.start_point for p in self.pieces])

    def arcs(self) -> list[Arc]:
        return [p for p in self.pieces if isinstance(p, Arc)]

    def perimeter(self) -> float:
        return sum(p.length() for p in self.pieces)

    def boundary_samples(self, n: int = 256) -> np.ndarray:
        """n points spread along the boundary, piecewise by arc length."""
        if self.is_singleton:
            return np.repeat(self._point[None, :], n, axis=0)
        lengths = np.array([p.length() for p in self.pieces])
        total = lengths.sum()
        counts = np.maximum(1, np.round(n * lengths / total).astype(int))
        pts = []
        for piece, k in zip(self.pieces, counts):
            for i in range(k):
                pts.append(piece.point_at(i / k))
        return np.array(pts)

    def interior_point(self) -> np.ndarray:
        if self._interior is None:
            if self.is_singleton:
                self._interior = self._point
            else:
                samples = [p.start_point for p in self.pieces]
                samples += [p.point_at(0.5) for p in self.pieces]
                self._interior = np.mean(samples, axis=0)
        return self._interior

    # -- support oracle -----------------------------------------------------

    def support_values(self, P):
        P = np.asarray(P, dtype=float)
        if self.is_singleton:
            return P @ self._point
        best = np.max(P @ self.vertices().T, axis=1)
        norms = np.linalg.norm(P, axis=1)
        phis = np.arctan2(P[:, 1], P[:, 0]) % TWO_PI
        for a in self.arcs():
            in_range = (phis - a.start_angle) % TWO_PI <= a.span
            if np.any(in_range):
                vals = P[in_range] @ np.asarray(a.center) + a.radius * norms[in_range]
                best[in_range] = np.maximum(best[in_range], vals)
        return best

    def support_points(self, P):
        P = np.asarray(P, dtype=float)
        if self.is_singleton:
            return np.repeat(self._point[None, :], len(P), axis=0)
        out = np.empty((len(P), 2))
        verts = self.vertices()
        for i, p in enumerate(P):
            n = float(np.linalg.norm(p))
            phi = _ang(p)
            cands = [(float(p @ v), v) for v in verts]
            for a in self.arcs():
                if a.contains_angle(phi):
                    pt = np.asarray(a.center) + a.radius * (p / n)
                    cands.append((float(p @ pt), pt))
            top = max(v for v, _ in cands)
            tied = [pt for v, pt in cands if v >= top - 1e-12 * (1.0 + abs(top))]
            tied.sort(key=lambda q: (q[0], q[1]))
            out[i] = tied[0]
        return out

    # -- membership ----------------------------------------------------------

    def boundary_distance_exact(self, x) -> float:
        """Unsigned Euclidean distance from x to the boundary curve."""
        x = as_vector(x)
        if self.is_singleton:
            return float(np.linalg.norm(x - self._point))
        dists = [
            _point_arc_dist(x, p) if isinstance(p, Arc) else _point_seg_dist(x, p)
            for p in self.pieces
        ]
        return min(dists)

    def _ray_inside(self, x: np.ndarray) -> bool:
        o = self.interior_point()
        d = x - o
        L = float(np.linalg.norm(d))
        if L < 1e-14:
            return True
        u = d / L
        hits = []
        for p in self.pieces:
            if isinstance(p, Seg):
                v = p.end_point - p.start_point
                denom = u[0] * (-v[1]) - u[1] * (-v[0])
                if abs(denom) < 1e-15:
                    continue
                w = p.start_point - o
                t = (w[0] * (-v[1]) - w[1] * (-v[0])) / denom
                s = (u[0] * w[1] - u[1] * w[0]) / denom
                if t > 0.0 and -1e-12 <= s <= 1.0 + 1e-12:
                    hits.append(t)
            else:
                oc = o - np.asarray(p.center)
                b = 2.0 * float(u @ oc)
                c0 = float(oc @ oc) - p.radius**2
                disc = b * b - 4.0 * c0
                if disc < 0.0:
                    continue
                sq = math.sqrt(disc)
                for t in ((-b - sq) / 2.0, (-b + sq) / 2.0):
                    if t > 0.0:
                        pt = o + t * u
                        if p.contains_angle(_ang(pt - np.asarray(p.center)), tol=1e-9):
                            hits.append(t)
        if not hits:
            return False
        return L <= min(hits) + 1e-12

    def contains(self, x, tol: float = 0.0, grid=None) -> bool:
        x = as_vector(x)
        if self.is_singleton:
            return float(np.linalg.norm(x - self._point)) <= tol
        if self._ray_inside(x):
            return True
        return self.boundary_distance_exact(x) <= tol

    def __repr__(self):
        if self.is_singleton:
            return f"ArcPolygon(singleton {self._point.tolist()})"
        return f"ArcPolygon({len(self.pieces)} pieces)"

    def _key(self):
        if self.is_singleton:
            return (self._point.tobytes(),)
        return tuple(
            (p.center, p.radius, p.start_angle, p.end_angle) if isinstance(p, Arc)
            else (p.start, p.end)
            for p in self.pieces
        )


# -- constructions ------------------------------------------------------------


def lens(a, b, R: float) -> ArcPolygon:
    """Region between the two radius-R minor arcs through a and b.

    Degenerates to a singleton for a == b; raises TooFarApartError when the
    chord is at least 2R so no radius-R arc joins the points.
    """
    a = as_vector(a)
    b = as_vector(b)
    if a.size != 2 or b.size != 2:
        raise ValueError("lens is a planar construction")
    if R <= 0.0:
        raise ValueError("radius must be positive")
    d = float(np.linalg.norm(b - a))
    if d < 1e-14:
        return ArcPolygon.singleton(a)
    if d >= 2.0 * R:
        raise TooFarApartError(f"|a-b| = {d} must be below 2R = {2 * R}")
    mid = 0.5 * (a + b)
    h = math.sqrt(max(R * R - 0.25 * d * d, 0.0))
    n_hat = np.array([-(b - a)[1], (b - a)[0]]) / d
    c_plus = mid + h * n_hat
    c_minus = mid - h * n_hat
    pieces = _make_arc(c_plus, R, _ang(a - c_plus), _ang(b - c_plus))
    pieces += _make_arc(c_minus, R, _ang(b - c_minus), _ang(a - c_minus))
    return ArcPolygon(pieces)


def _arc_fragments_in_disk(piece: Arc, c: np.ndarray, R: float):
    """Sub-intervals (in piece-relative angle) of an arc lying inside B_R(c)."""
    q = np.asarray(piece.center)
    rho = piece.radius
    d = float(np.linalg.norm(q - c))
    span = piece.span
    if d < 1e-14:
        if rho <= R + 1e-12:
            return [(0.0, span)]
        return []
    if d >= rho + R or rho - d >= R:
        return []
    if d + rho <= R:
        return [(0.0, span)]
    t = (rho * rho + d * d - R * R) / (2.0 * rho * d)
    gamma = math.acos(min(1.0, max(-1.0, t)))
    theta_c = _ang(c - q)
    a0 = (theta_c - gamma - piece.start_angle) % TWO_PI
    out = []
    for shift in (a0 - TWO_PI, a0):
        lo = max(0.0, shift)
        hi = min(span, shift + 2.0 * gamma)
        if hi - lo > 1e-12:
            out.append((lo, hi))
    return out


def _seg_fragments_in_disk(piece: Seg, c: np.ndarray, R: float):
    p0 = piece.start_point
    v = piece.end_point - p0
    a = float(v @ v)
    if a == 0.0:
        return []
    w = p0 - c
    b = 2.0 * float(v @ w)
    e = float(w @ w) - R * R
    disc = b * b - 4.0 * a * e
    if disc <= 0.0:
        mid = p0 + 0.5 * v
        if float(np.linalg.norm(mid - c)) <= R:
            return [(0.0, 1.0)]
        return []
    sq = math.sqrt(disc)
    lo = max(0.0, (-b - sq) / (2.0 * a))
    hi = min(1.0, (-b + sq) / (2.0 * a))
    if hi - lo > 1e-12:
        return [(lo, hi)]
    return []


def _sub_piece(piece, lo: float, hi: float):
    if isinstance(piece, Arc):
        a = (piece.start_angle + lo) % TWO_PI
        b = (piece.start_angle + hi) % TWO_PI
        return Arc(piece.center, piece.radius, a, b)
    p0 = piece.point_at(lo)
    p1 = piece.point_at(hi)
    return Seg((p0[0], p0[1]), (p1[0], p1[1]))


def _clean_pieces(pieces):
    """Drop near-degenerate pieces and merge adjacent arcs of one circle."""
    kept = [p for p in pieces if p.length() > MERGE_TOL]
    if len(kept) < 2:
        return kept
    merged = []
    for p in kept:
        if merged and isinstance(p, Arc) and isinstance(merged[-1], Arc):
            q = merged[-1]
            same = (np.allclose(q.center, p.center, atol=1e-12)
                    and abs(q.radius - p.radius) < 1e-12
                    and abs((p.start_angle - q.end_angle) % TWO_PI) < 1e-9)
            if same and q.span + p.span < MAX_ARC_SPAN:
                merged[-1] = Arc(q.center, q.radius, q.start_angle, p.end_angle)
                continue
        merged.append(p)
    if (len(merged) > 1 and isinstance(merged[0], Arc) and isinstance(merged[-1], Arc)):
        p, q = merged[0], merged[-1]
        same = (np.allclose(q.center, p.center, atol=1e-12)
                and abs(q.radius - p.radius) < 1e-12
                and abs((p.start_angle - q.end_angle) % TWO_PI) < 1e-9)
        if same and q.span + p.span < MAX_ARC_SPAN:
            merged[0] = Arc(q.center, q.radius, q.start_angle, p.end_angle)
            merged.pop()
    return merged


def clip_with_disk(ap: ArcPolygon, center, R: float) -> ArcPolygon | None:
    """Intersection of a convex arc polygon with the disk B_R(center)."""
    c = as_vector(center)
    if ap.is_singleton:
        pt = ap.singleton_point
        if float(np.linalg.norm(pt - c)) <= R + 1e-12:
            return ap
        return None
    frags = []
    any_cut = False
    for piece in ap.pieces:
        if isinstance(piece, Arc):
            ivs = _arc_fragments_in_disk(piece, c, R)
            full = piece.span
        else:
            ivs = _seg_fragments_in_disk(piece, c, R)
            full = 1.0
        for lo, hi in ivs:
            cut_lo = lo > 1e-12
            cut_hi = hi < full - 1e-12
            any_cut = any_cut or cut_lo or cut_hi
            frags.append(_sub_piece(piece, lo, hi))
    if not frags:
        if ap.contains(c, tol=0.0):
            return ArcPolygon.full_disk(c, R)
        return None
    if not any_cut:
        return ap
    pieces = []
    k = len(frags)
    for i, frag in enumerate(frags):
        pieces.append(frag)
        nxt = frags[(i + 1) % k]
        gap = float(np.linalg.norm(nxt.start_point - frag.end_point))
        if gap > MERGE_TOL:
            a0 = _ang(frag.end_point - c)
            a1 = _ang(nxt.start_point - c)
            pieces += _make_arc(c, R, a0, a1)
    pieces = _clean_pieces(pieces)
    if not pieces:
        return None
    if len(pieces) == 1:
        # a single piece cannot close a loop; the overlap is (near) degenerate
        return ArcPolygon.singleton(pieces[0].point_at(0.5))
    return ArcPolygon(pieces)


def _dedupe(points: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    out = []
    for p in points:
        if not any(np.linalg.norm(p - q) <= tol for q in out):
            out.append(p)
    return np.array(out)


def disk_intersection(centers, R: float) -> ArcPolygon | None:
    """Exact arc polygon of the intersection of radius-R disks, or None if void."""
    centers = np.asarray(centers, dtype=float)
    if centers.ndim != 2 or centers.shape[1] != 2 or len(centers) == 0:
        raise EmptyInputError("need a nonempty (n, 2) array of centers")
    if R <= 0.0:
        raise ValueError("radius must be positive")
    pts = _dedupe(centers)
    if len(pts) == 1:
        return ArcPolygon.full_disk(pts[0], R)
    # cheap reject, then the exact certificate via the minimal enclosing circle
    d2max = np.max(np.sum((pts[:, None, :] - pts[None, :, :]) ** 2, axis=-1))
    if d2max > (2.0 * R) ** 2 + 1e-12:
        return None
    c_seb, r_seb = smallest_enclosing_circle(pts)
    if r_seb > R + 1e-9:
        return None
    if r_seb >= R - 1e-9:
        # kernel collapses to (essentially) one point
        return ArcPolygon.singleton(c_seb)
    region: ArcPolygon | None = ArcPolygon.full_disk(pts[0], R)
    for c in pts[1:]:
        region = clip_with_disk(region, c, R)
        if region is None or region.is_singleton:
            return region
    return region


def r_hull(points, R: float) -> ArcPolygon:
    """Strongly convex hull of radius R: intersection of all R-balls containing the points.

    Computed by intersecting the balls centered at the vertices of the kernel
    (the region of admissible centers); the kernel-vertex reduction is
    cross-checked against a dense-center sampling oracle in the test suite.
    """
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or points.shape[1] != 2 or len(points) == 0:
        raise EmptyInputError("need a nonempty (n, 2) point array")
    if R <= 0.0:
        raise ValueError("radius must be positive")
    pts = _dedupe(points)
    if len(pts) == 1:
        return ArcPolygon.singleton(pts[0])
    c_seb, r_seb = smallest_enclosing_circle(pts)
    if r_seb > R + 1e-9:
        raise NoEnclosingBallError(
            f"points need an enclosing ball of radius {r_seb:.6g} > R = {R:.6g}")
    if r_seb >= R - 1e-9:
        return ArcPolygon.full_disk(c_seb, R)
    kernel = disk_intersection(pts, R)
    if kernel is None:
        raise NoEnclosingBallError("no admissible centers at this radius")
    if kernel.is_singleton:
        return ArcPolygon.full_disk(kernel.singleton_point, R)
    hull = disk_intersection(kernel.vertices(), R)
    if hull is None:
        raise GeometryError("kernel vertices produced an empty intersection")
    return hull


def offset(ap: ArcPolygon, r: float) -> ArcPolygon:
    """Minkowski sum with the disk B_r(0): grown arcs, shifted segments, vertex caps."""
    if r < 0.0:
        raise ValueError("offset distance must be nonnegative")
    if r == 0.0:
        return ap
    if ap.is_singleton:
        return ArcPolygon.full_disk(ap.singleton_point, r)

    def normal_out(piece):
        if isinstance(piece, Arc):
            return piece.start_angle, piece.end_angle
        n = piece.normal_angle
        return n, n

    grown = []
    for piece in ap.pieces:
        if isinstance(piece, Arc):
            grown.append(Arc(piece.center, piece.radius + r, piece.start_angle, piece.end_angle))
        else:
            n = piece.normal_angle
            shift = r * _e(n)
            p0 = piece.start_point + shift
            p1 = piece.end_point + shift
            grown.append(Seg((p0[0], p0[1]), (p1[0], p1[1])))
    pieces = []
    k = len(ap.pieces)
    for i in range(k):
        pieces.append(grown[i])
        v = ap.pieces[i].end_point
        _, n_end = normal_out(ap.pieces[i])
        n_start, _ = normal_out(ap.pieces[(i + 1) % k])
        gap = (n_start - n_end) % TWO_PI
        if 1e-12 < gap < TWO_PI - 1e-12:
            pieces += _make_arc(v, r, n_end, n_start)
    return ArcPolygon(_clean_pieces(pieces))


def arc_support(ap: ArcPolygon, p) -> SupportEval:
    """Exact supporting value and point of an arc polygon in the unit direction p."""
    p = as_direction(p)
    value = float(ap.support_values(p[None, :])[0])
    point = ap.support_points(p[None, :])[0]
    return SupportEval(value=value, point=point)


def hausdorff_distance(a: ConvexBody, b: ConvexBody, grid=None) -> float:
    """Hausdorff distance between convex bodies via the support-gap identity."""
    if grid is None:
        grid = default_grid(2)
    return float(np.max(np.abs(a.support_values(grid) - b.support_values(grid))))
