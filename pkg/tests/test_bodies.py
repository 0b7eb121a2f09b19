import math

import numpy as np
import pytest

import strconvex as sc
from strconvex.bodies import grid_angle_error, support_curvature_radii

SQ2 = math.sqrt(2.0)


class TestSupportEval:
    def test_unit_ball(self):
        ev = sc.support_eval(sc.Ball([0, 0], 1.0), [0, 1])
        assert ev.value == pytest.approx(1.0, abs=1e-12)
        assert np.allclose(ev.point, [0, 1], atol=1e-12)

    def test_shifted_ball(self):
        ev = sc.support_eval(sc.Ball([1, 0], 2.0), [1, 0])
        assert ev.value == pytest.approx(3.0, abs=1e-12)
        assert np.allclose(ev.point, [3, 0], atol=1e-12)

    def test_ellipse_axis_endpoint(self):
        ev = sc.support_eval(sc.Ellipsoid([0, 0], [2, 1]), [1, 0])
        assert ev.value == pytest.approx(2.0, abs=1e-12)
        assert np.allclose(ev.point, [2, 0], atol=1e-12)

    def test_hull_tie_breaks_lexicographically(self):
        h = sc.PointHull([[0, 0], [1, 0], [0, 1]])
        ev = sc.support_eval(h, np.array([1, 1]) / SQ2)
        assert ev.value == pytest.approx(1 / SQ2, abs=1e-12)
        # (0,1) and (1,0) tie; lexicographically smallest wins
        assert np.allclose(ev.point, [0, 1])

    def test_direction_must_be_unit(self):
        with pytest.raises(ValueError):
            sc.support_eval(sc.Ball([0, 0], 1.0), [1, 1])

    def test_empty_hull_rejected(self):
        with pytest.raises(sc.EmptyBodyError):
            sc.PointHull(np.zeros((0, 2)))


class TestContains:
    def test_ball_inside(self):
        assert sc.contains(sc.Ball([0, 0], 1.0), [0.5, 0.5])

    def test_ball_outside(self):
        assert not sc.contains(sc.Ball([0, 0], 1.0), [1.1, 0])

    def test_ellipse_boundary(self):
        assert sc.contains(sc.Ellipsoid([0, 0], [2, 1]), [0, 1])

    def test_hull_grid_membership(self):
        sq = sc.PointHull([[-1, -1], [1, -1], [1, 1], [-1, 1]])
        assert sc.contains(sq, [0.9, 0.9])
        assert not sc.contains(sq, [1.05, 0])


class TestBoundaryDistance:
    def test_ball_center(self):
        assert sc.boundary_distance(sc.Ball([0, 0], 1.0), [0, 0]) == pytest.approx(1.0, abs=1e-6)

    def test_ball_offcenter(self):
        assert sc.boundary_distance(sc.Ball([0, 0], 1.0), [0.5, 0]) == pytest.approx(0.5, abs=1e-6)

    def test_ellipse_center(self):
        assert sc.boundary_distance(sc.Ellipsoid([0, 0], [2, 1]), [0, 0]) == pytest.approx(1.0, abs=1e-6)

    def test_outside_raises(self):
        with pytest.raises(sc.OutsideBodyError):
            sc.boundary_distance(sc.Ball([0, 0], 1.0), [2, 0])


class TestMinkowski:
    def test_radii_add(self):
        parts = [sc.Ball([0, 0], 1.0), sc.Ball([0, 0], 2.0)]
        for p in sc.angle_grid(16):
            assert sc.minkowski_support(parts, p) == pytest.approx(3.0, abs=1e-12)

    def test_translation_cancels(self):
        parts = [sc.Ball([1, 0], 1.0), sc.PointHull([[-1, 0]])]
        assert sc.minkowski_support(parts, [1, 0]) == pytest.approx(1.0, abs=1e-12)

    def test_ellipse_plus_ball(self):
        for r in (0.5, 1.0, 2.0):
            parts = [sc.Ellipsoid([0, 0], [2, 1]), sc.Ball([0, 0], r)]
            assert sc.minkowski_support(parts, [0, 1]) == pytest.approx(1 + r, abs=1e-12)

    def test_empty_raises(self):
        with pytest.raises(sc.EmptyInputError):
            sc.minkowski_support([], [1, 0])

    def test_matches_brute_force_on_point_hulls(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            A = rng.standard_normal((6, 2))
            B = rng.standard_normal((5, 2))
            parts = [sc.PointHull(A), sc.PointHull(B)]
            sums = (A[:, None, :] + B[None, :, :]).reshape(-1, 2)
            p = rng.standard_normal(2)
            p /= np.linalg.norm(p)
            brute = float(np.max(sums @ p))
            assert sc.minkowski_support(parts, p) == pytest.approx(brute, abs=1e-6)


def _random_bodies(rng, n):
    out = []
    for _ in range(n):
        kind = rng.integers(3)
        if kind == 0:
            out.append(sc.Ball(rng.uniform(-2, 2, 2), rng.uniform(0.2, 3.0)))
        elif kind == 1:
            axes = np.sort(rng.uniform(0.3, 3.0, 2))[::-1]
            t = rng.uniform(0, 2 * np.pi)
            rot = np.array([[np.cos(t), -np.sin(t)], [np.sin(t), np.cos(t)]])
            out.append(sc.Ellipsoid(rng.uniform(-2, 2, 2), axes, rot))
        else:
            out.append(sc.PointHull(rng.uniform(-2, 2, (rng.integers(1, 9), 2))))
    return out


class TestInvariants:
    def test_positive_homogeneity(self):
        rng = np.random.default_rng(0)
        for body in _random_bodies(rng, 12):
            P = rng.standard_normal((64, 2))
            s = body.support_values(P)
            for lam in (0.5, 2.0, 10.0):
                scaled = body.support_values(lam * P)
                assert np.max(np.abs(scaled - lam * s)) <= 1e-10 * (1 + np.abs(s).max())

    def test_subadditivity(self):
        rng = np.random.default_rng(1)
        for body in _random_bodies(rng, 12):
            P = rng.standard_normal((64, 2))
            Q = rng.standard_normal((64, 2))
            lhs = body.support_values(P + Q)
            rhs = body.support_values(P) + body.support_values(Q)
            assert np.all(lhs <= rhs + 1e-10)

    def test_support_point_consistency(self):
        rng = np.random.default_rng(2)
        for body in _random_bodies(rng, 12):
            for p in sc.angle_grid(16):
                ev = sc.support_eval(body, p)
                assert abs(float(p @ ev.point) - ev.value) <= 1e-9
                assert sc.contains(body, ev.point, tol=1e-9)


class TestGrids:
    def test_angle_grid_units(self):
        g = sc.angle_grid(128)
        assert np.allclose(np.linalg.norm(g, axis=1), 1.0, atol=1e-14)

    def test_sphere_grid_units_and_determinism(self):
        g1 = sc.sphere_grid(500, 3)
        g2 = sc.sphere_grid(500, 3)
        assert np.array_equal(g1, g2)
        assert np.allclose(np.linalg.norm(g1, axis=1), 1.0, atol=1e-12)

    def test_grid_error_scale(self):
        # supporting a unit ball on a grid loses at most the stated bound
        g = sc.angle_grid(256)
        ball = sc.Ball([0, 0], 1.0)
        worst = 0.0
        for t in np.linspace(0, 2 * np.pi, 33):
            x = np.array([np.cos(t), np.sin(t)])
            slack = np.min(ball.support_values(g) - g @ x)
            worst = max(worst, -slack if slack < 0 else 0.0)
        assert worst <= grid_angle_error(2.0, 256)


class TestCurvatureRadii:
    def test_ball_constant(self):
        radii = support_curvature_radii(sc.Ball([0.3, -0.2], 1.7), 1024)
        assert np.allclose(radii, 1.7, atol=1e-4)

    def test_ellipse_extremes(self):
        radii = support_curvature_radii(sc.Ellipsoid([0, 0], [2, 1]), 4096)
        assert radii.max() == pytest.approx(4.0, rel=1e-4)
        assert radii.min() == pytest.approx(0.5, rel=1e-4)
