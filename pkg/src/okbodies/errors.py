"""Exception hierarchy for mathematically meaningful failures.

Every error that reflects a property of the input (not big, not
pseudo-effective, infinite orbit, ...) derives from ``OkbodyError`` so the
CLI can map it to exit code 1, distinct from usage errors (exit code 2).
"""


class OkbodyError(Exception):
    """Base class for mathematical errors raised by this package."""


class SingularSystemError(OkbodyError):
    """Linear system has no unique solution (malformed candidate support)."""


class NotInConeError(ValueError):
    """Precondition violation: the start vector lies outside the cone."""


class UnboundedThresholdError(OkbodyError):
    """The ray never leaves the cone; the exit threshold is unbounded."""


class OrbitBoundExceededError(OkbodyError):
    """Orbit enumeration exceeded its safety bound (infinite orbit for n=9 seeds)."""

    def __init__(self, bound: int):
        self.bound = bound
        super().__init__(f"orbit exceeded the size bound {bound}")


class CremonaUndefinedError(OkbodyError):
    """The quadratic reflection needs at least three blown-up points."""


class InfiniteConeError(OkbodyError):
    """Positivity-cone query on a surface whose cone is not finitely generated."""


class NotPseudoEffectiveError(OkbodyError):
    """Class lies outside the pseudo-effective cone."""


class NotBigError(OkbodyError):
    """Class has volume zero (or is outside the big cone)."""


class NotNefError(OkbodyError):
    """Class pairs negatively with some curve class."""


class UnsupportedPipelineError(OkbodyError):
    """Request outside the supported n=9 special-case pipeline."""


class InvariantViolationError(OkbodyError):
    """An internal invariant failed; signals a bug, never expected for valid input."""
