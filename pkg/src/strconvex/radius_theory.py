"""Quantitative radius results: chord radius, refinement map, fixed point, sharpness.

For a body whose modulus grows like K eps^2, the chord construction certifies
strong convexity at radius 1/(4K); one refinement step improves a radius R to
2R/(8RK + 1), and iterating the map converges monotonically to the sharp
value 1/(8K).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GeometryError, NotConvergedError, OutOfDomainError, PreconditionError
from .modulus import ModulusCurve, SecondOrderFit, ball_modulus, fit_second_order


def chord_radius(eps: float, delta: float) -> float:
    """Radius eps^2/(4 delta) of the arc through a chord tangent to its midpoint ball."""
    if eps <= 0.0:
        raise OutOfDomainError("eps must be positive")
    if not 0.0 < delta < 0.5 * eps:
        raise OutOfDomainError("delta must lie in (0, eps/2)")
    return eps * eps / (4.0 * delta)


def zero_step_radius(K: float) -> float:
    """Strong-convexity radius 1/(4K) certified directly by the chord construction."""
    if K <= 0.0:
        raise OutOfDomainError("K must be positive")
    return 1.0 / (4.0 * K)


def sin_phi_bound(eps: float, delta: float, R: float) -> float:
    """Tangent-angle sine eps/(4R) + (2 delta/eps)(1 - delta/R) of the refinement step."""
    if not 0.0 < delta < 0.5 * eps:
        raise OutOfDomainError("delta must lie in (0, eps/2)")
    if not 0.5 * eps < R:
        raise OutOfDomainError("need eps/2 < R")
    value = eps / (4.0 * R) + (2.0 * delta / eps) * (1.0 - delta / R)
    if not 0.0 < value <= 1.0:
        raise GeometryError(f"sin(phi) = {value} outside (0, 1]; construction invalid")
    return value


def refined_rho(eps: float, sin_phi: float) -> float:
    """Arc radius eps/(2 sin(phi)) through the chord at tangent angle phi."""
    if not 0.0 < sin_phi <= 1.0:
        raise OutOfDomainError("sin(phi) must lie in (0, 1]")
    if eps <= 0.0:
        raise OutOfDomainError("eps must be positive")
    return eps / (2.0 * sin_phi)


def radius_map(R: float, K: float) -> float:
    """Refinement map 2R/(8RK + 1); increasing in R on R >= 0, fixed point 1/(8K)."""
    if K <= 0.0:
        raise OutOfDomainError("K must be positive")
    if R < 0.0:
        raise OutOfDomainError("R must be nonnegative")
    return 2.0 * R / (8.0 * R * K + 1.0)


def refine_radius(R: float, K: float) -> float:
    """One refinement step; requires R above the fixed point 1/(8K)."""
    if K <= 0.0:
        raise OutOfDomainError("K must be positive")
    if R <= 1.0 / (8.0 * K):
        raise PreconditionError(f"refinement needs R > 1/(8K) = {1.0 / (8.0 * K)}")
    return radius_map(R, K)


@dataclass(frozen=True)
class RadiusSequence:
    """Iterates of the refinement map, decreasing toward the limit 1/(8K)."""

    K: float
    values: tuple[float, ...]
    converged: bool
    limit: float


def radius_fixed_point(
    R0: float,
    K: float,
    tol: float = 1e-9,
    max_iter: int = 500,
) -> RadiusSequence:
    """Iterate the refinement map from R0 until within tol of the limit 1/(8K).

    The sequence is strictly decreasing and stays above the limit.  Raises
    NotConvergedError (carrying the partial sequence) if max_iter is hit.
    """
    if tol <= 0.0:
        raise OutOfDomainError("tol must be positive")
    limit = 1.0 / (8.0 * K) if K > 0.0 else math.inf
    if K <= 0.0 or R0 <= limit:
        raise PreconditionError("need K > 0 and R0 > 1/(8K)")
    values = [float(R0)]
    R = float(R0)
    for _ in range(max_iter):
        if abs(R - limit) <= tol:
            return RadiusSequence(K=K, values=tuple(values), converged=True, limit=limit)
        R = refine_radius(R, K)
        values.append(R)
    if abs(R - limit) <= tol:
        return RadiusSequence(K=K, values=tuple(values), converged=True, limit=limit)
    partial = RadiusSequence(K=K, values=tuple(values), converged=False, limit=limit)
    raise NotConvergedError(
        f"fixed-point iteration did not reach tol={tol} in {max_iter} steps", partial)


def sharp_radius(C: float) -> float:
    """The sharp ball radius 1/(8C) for second-order constant C."""
    if C <= 0.0:
        raise OutOfDomainError("C must be positive")
    return 1.0 / (8.0 * C)


@dataclass(frozen=True)
class SharpnessVerdict:
    """Outcome of testing a claimed ball radius against a modulus curve."""

    contradiction: bool
    fitted_constant: float
    required_constant: float
    pointwise_violations: int
    pointwise_checked: int


@dataclass(frozen=True)
class SharpnessReport:
    C: float
    predicted_radius: float
    measured_radius: float | None
    below_radius_tested: float
    below_verdict: SharpnessVerdict


def sharpness_check(
    curve: ModulusCurve,
    r: float,
    window: tuple[float, float] | None = None,
    margin: float = 0.02,
    measured_radius: float | None = None,
    fit: SecondOrderFit | None = None,
) -> SharpnessReport:
    """Test whether the curve is consistent with an intersection of radius-r balls.

    An intersection of radius-r balls has modulus at least that of the ball,
    so its second-order constant is at least 1/(8r).  A fitted constant below
    1/(8r) by more than the margin certifies that the claimed r is impossible.
    The pointwise ball-modulus bound is evaluated alongside.
    """
    if r <= 0.0:
        raise OutOfDomainError("r must be positive")
    if fit is None:
        fit = fit_second_order(curve, window=window)
    required = 1.0 / (8.0 * r)
    contradiction = fit.C * (1.0 + margin) < required
    violations = 0
    checked = 0
    for s in curve.samples:
        if s.eps >= 2.0 * r:
            continue
        checked += 1
        if s.delta < ball_modulus(r, s.eps) - s.error_bound:
            violations += 1
    verdict = SharpnessVerdict(
        contradiction=bool(contradiction),
        fitted_constant=float(fit.C),
        required_constant=float(required),
        pointwise_violations=violations,
        pointwise_checked=checked,
    )
    return SharpnessReport(
        C=float(fit.C),
        predicted_radius=sharp_radius(fit.C),
        measured_radius=measured_radius,
        below_radius_tested=float(r),
        below_verdict=verdict,
    )
