"""Exception types shared across the library."""


class StrConvexError(Exception):
    """Base class for all library-specific errors."""


class EmptyBodyError(StrConvexError):
    """A body with no points was passed where a nonempty one is required."""


class EmptyInputError(StrConvexError):
    """An empty collection was passed where at least one element is required."""


class OutsideBodyError(StrConvexError):
    """A query point lies outside the body."""


class TooFarApartError(StrConvexError):
    """Two points are too far apart to be joined by arcs of the given radius."""


class NoEnclosingBallError(StrConvexError):
    """No ball of the requested radius contains all input points."""


class OutOfDomainError(StrConvexError):
    """A scalar argument lies outside the mathematical domain of the formula."""


class PreconditionError(StrConvexError):
    """An operation-specific precondition was violated."""


class GeometryError(StrConvexError):
    """An intermediate geometric construction is invalid (degenerate or inconsistent)."""


class NotUniformlyConvexError(StrConvexError):
    """The body shows no certifiable positive modulus of convexity."""


class NotStronglyConvexError(StrConvexError):
    """The body failed the strong-convexity criterion at the requested radius."""


class NotConvergedError(StrConvexError):
    """An iteration exceeded its step budget. Carries the partial result."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
