"""Exception types raised by jamloc."""


class JamlocError(Exception):
    """Base class for all jamloc errors."""


class EmptyPointSet(JamlocError, ValueError):
    pass


class DegenerateSegment(JamlocError, ValueError):
    pass


class NearParallelLines(JamlocError, ArithmeticError):
    pass


class NonPositiveDistance(JamlocError, ValueError):
    pass


class NoBoundaryNodes(JamlocError, ValueError):
    pass


class InsufficientBoundaryNodes(JamlocError, ValueError):
    pass


class NoTransverseChord(JamlocError, ValueError):
    pass


class InvariantViolation(JamlocError, RuntimeError):
    """An internal consistency check failed."""


# Typed failures after which GJL hands over to CJ.
GJL_FALLBACK_ERRORS = (InsufficientBoundaryNodes, NoTransverseChord, NearParallelLines)
