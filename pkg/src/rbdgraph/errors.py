"""Exception hierarchy shared by all modules.

Every error the library raises derives from ``RbdError`` so the CLI can map
input problems to exit status 1 and ``InvariantViolation`` to exit status 2.
"""


class RbdError(Exception):
    """Base class for library errors."""


class InvalidInput(RbdError, ValueError):
    pass


class InvalidSite(InvalidInput):
    pass


class NotBlowdownSite(InvalidInput):
    pass


class NotInZk(InvalidInput):
    pass


class NotAFilling(InvalidInput):
    pass


class LimitExceeded(InvalidInput):
    pass


class MissingDiagonal(InvalidInput):
    pass


class NotAnEar(InvalidInput):
    pass


class InvalidSelector(InvalidInput):
    pass


class InvalidQuad(InvalidInput):
    pass


class InvalidPath(InvalidInput):
    pass


class NotNegativeDefinite(InvalidInput):
    pass


class SubstitutionCurveMissing(RbdError):
    """A lantern substitution needed a curve the word does not contain."""


class InvariantViolation(RbdError, AssertionError):
    """An internal consistency check failed; this indicates a bug."""
