"""Exception hierarchy shared across the package."""


class StickKnotError(Exception):
    """Base class for all stickknot errors."""


class InputError(StickKnotError):
    """Malformed user input: bad coordinate file, bad flag, bad config."""


class DegenerateGeometry(StickKnotError):
    """Geometric precondition violated: collinear frame, zero axis, ..."""


class NonGenericProjection(StickKnotError):
    """Projection direction fails a genericity test; carries the reason."""


class NonGenericDirection(StickKnotError):
    """Direction has a vanishing dot product with some edge."""


class ResourceLimit(StickKnotError):
    """A configured resource cap (e.g. skein crossing budget) was exceeded."""


class InconsistentBounds(StickKnotError):
    """Interval tightening produced an empty interval."""
