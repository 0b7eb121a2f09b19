"""Randomized property suites over the module invariants.

Each suite runs at least 10^3 randomized cases with a fixed seed; the
acceptance module re-runs them under a time budget.
"""
import numpy as np
import pytest

import strconvex as sc
from strconvex.radius_theory import radius_map
from strconvex.strongconv import GapFunction


def _random_body(rng):
    kind = rng.integers(3)
    if kind == 0:
        return sc.Ball(rng.uniform(-2, 2, 2), rng.uniform(0.2, 3.0))
    if kind == 1:
        axes = np.sort(rng.uniform(0.3, 3.0, 2))[::-1]
        t = rng.uniform(0, 2 * np.pi)
        rot = np.array([[np.cos(t), -np.sin(t)], [np.sin(t), np.cos(t)]])
        return sc.Ellipsoid(rng.uniform(-2, 2, 2), axes, rot)
    return sc.PointHull(rng.uniform(-2, 2, (int(rng.integers(1, 9)), 2)))


def run_homogeneity(n_cases=1200, seed=0) -> int:
    rng = np.random.default_rng(seed)
    cases = 0
    while cases < n_cases:
        body = _random_body(rng)
        g = GapFunction(body, rng.uniform(0.5, 5.0))
        P = rng.standard_normal((32, 2))
        base = g.values(P)
        for lam in (0.5, 2.0, 10.0):
            scaled = g.values(lam * P)
            assert np.max(np.abs(scaled - lam * base)) <= 1e-10 * (1 + np.abs(base).max())
        cases += 3 * len(P)
    return cases


def run_subadditivity(n_cases=1200, seed=1) -> int:
    rng = np.random.default_rng(seed)
    cases = 0
    while cases < n_cases:
        body = _random_body(rng)
        P = rng.standard_normal((64, 2))
        Q = rng.standard_normal((64, 2))
        lhs = body.support_values(P + Q)
        rhs = body.support_values(P) + body.support_values(Q)
        assert np.all(lhs <= rhs + 1e-10)
        cases += len(P)
    return cases


def run_up_closedness(n_cases=1000, seed=2) -> int:
    rng = np.random.default_rng(seed)
    cases = 0
    while cases < n_cases:
        axes = np.sort(rng.uniform(0.4, 2.0, 2))[::-1]
        body = sc.Ellipsoid(rng.uniform(-1, 1, 2), axes)
        R = float(axes[0] ** 2 / axes[1]) * rng.uniform(1.001, 1.5)
        assert sc.check_strong_convexity(body, R, n_pairs=512).is_convex
        for mult in (1.1, 2.0, 10.0):
            assert sc.check_strong_convexity(body, mult * R, n_pairs=512).is_convex
            cases += 1
    return cases


def run_ratio_monotonicity(n_cases=1000, seed=3) -> int:
    rng = np.random.default_rng(seed)
    cases = 0
    while cases < n_cases:
        axes = np.sort(rng.uniform(0.5, 2.0, 2))[::-1]
        body = sc.Ellipsoid(rng.uniform(-1, 1, 2), axes)
        diam = body.diameter()
        eps = np.linspace(0.08, 0.85, 66) * diam
        curve = sc.modulus_curve(body, eps, 256)
        ratio = curve.delta / curve.eps
        slack = 2.0 * curve.error_bound / curve.eps
        assert np.all(np.diff(ratio) >= -(slack[1:] + slack[:-1]))
        cases += len(eps) - 1
    return cases


def run_fixed_point_identity(n_cases=2000, seed=4) -> int:
    rng = np.random.default_rng(seed)
    K = rng.uniform(0.01, 10.0, n_cases)
    for k in K:
        r = 1.0 / (8.0 * k)
        assert radius_map(r, k) == r
    return n_cases


@pytest.mark.parametrize("suite", [
    run_homogeneity,
    run_subadditivity,
    run_up_closedness,
    run_ratio_monotonicity,
    run_fixed_point_identity,
])
def test_property_suite(suite):
    assert suite() >= 1000
