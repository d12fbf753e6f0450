"""Exception hierarchy shared by every module."""


class HomLieError(Exception):
    """Base class for all errors raised by nhomlie."""


class DimensionError(HomLieError, ValueError):
    """Shapes, arities or ambient dimensions do not match."""


class PreconditionError(HomLieError):
    """A mathematical hypothesis of a construction does not hold.

    ``witness`` carries the first offending basis instance when there is one.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotATraceError(PreconditionError):
    pass


class NotACocycleError(PreconditionError):
    pass


class PostconditionError(HomLieError, AssertionError):
    """A construction produced output violating its guaranteed property.

    Raising this means a theorem the construction relies on failed on the
    given data, which is reported rather than silently ignored.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(HomLieError, ValueError):
    """Malformed input document.  ``location`` is a line or field path."""

    def __init__(self, message, location=None):
        self.location = location
        text = message if location is None else f"{location}: {message}"
        super().__init__(text)
