"""Convex-geometry toolkit: supporting functions, moduli of convexity, ball
hulls and strong-convexity radii of convex bodies in Euclidean space."""

from .arcpoly import (
    Arc,
    ArcPolygon,
    Seg,
    arc_support,
    disk_intersection,
    hausdorff_distance,
    lens,
    offset,
    r_hull,
)
from .bodies import (
    Ball,
    ConvexBody,
    Ellipsoid,
    MinkowskiSum,
    PointHull,
    SupportEval,
    angle_grid,
    as_direction,
    as_vector,
    boundary_distance,
    contains,
    default_grid,
    minkowski_support,
    sphere_grid,
    support_eval,
    unit,
)
from .errors import (
    EmptyBodyError,
    EmptyInputError,
    GeometryError,
    NoEnclosingBallError,
    NotConvergedError,
    NotStronglyConvexError,
    NotUniformlyConvexError,
    OutOfDomainError,
    OutsideBodyError,
    PreconditionError,
    StrConvexError,
    TooFarApartError,
)
from .modulus import (
    ModulusCurve,
    ModulusSample,
    SecondOrderFit,
    ball_modulus,
    estimate_modulus,
    fit_second_order,
    lens_modulus_bound,
    modulus_curve,
)
from .radius_theory import (
    RadiusSequence,
    SharpnessReport,
    SharpnessVerdict,
    chord_radius,
    radius_fixed_point,
    radius_map,
    refine_radius,
    refined_rho,
    sharp_radius,
    sharpness_check,
    sin_phi_bound,
    zero_step_radius,
)
from .seb import smallest_enclosing_circle
from .strongconv import (
    ComplementBody,
    ConvexityVerdict,
    GapFunction,
    check_strong_convexity,
    complement_body,
    gap_value,
    local_lens_check,
    min_strong_radius,
    supporting_ball_check,
)

__version__ = "0.1.0"
