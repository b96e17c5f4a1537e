"""Exception types shared across the package."""


class GesselError(Exception):
    """Base class for errors raised by this package."""


class MalformedWordError(GesselError, ValueError):
    """A token or letter does not belong to the declared alphabet."""


class CapExceededError(GesselError, RuntimeError):
    """A request exceeds the configured enumeration or DP size cap."""


class PathConstraintError(GesselError, ValueError):
    """A path violates a floor constraint.

    Carries enough context to name the offending segment: ``segment`` is the
    1-based index of the violated floor (None for the global floor 0),
    ``abscissa`` the position along the path, ``height`` the ordinate found
    and ``floor`` the minimum that was required there.
    """

    def __init__(self, message, *, segment=None, abscissa=None, floor=None, height=None):
        super().__init__(message)
        self.segment = segment
        self.abscissa = abscissa
        self.floor = floor
        self.height = height


class IntegralityError(GesselError, ArithmeticError):
    """An exact rational that must reduce to an integer failed to."""


class FixtureError(GesselError, ValueError):
    """A vendored data fixture is missing or malformed."""
