"""Exception hierarchy shared across the package."""


class DegsetError(Exception):
    """Base class for all errors raised by degset."""


class ParseError(DegsetError, ValueError):
    pass


class ZeroDegreeVertex(DegsetError, ValueError):
    pass


class IndexOutOfRange(DegsetError, IndexError):
    pass


class NotGraphic(DegsetError, ValueError):
    pass


class BadPartition(DegsetError, ValueError):
    pass


class PreconditionViolated(DegsetError, ValueError):
    pass


class NotApplicable(DegsetError, ValueError):
    """A closed form was requested outside its domain."""


class BadInterval(DegsetError, ValueError):
    pass


class LimitExceeded(DegsetError):
    """A configured size limit was hit.

    ``window`` is the search window that was being scanned (or None) and
    ``searched_up_to`` the largest degree total already ruled out, so a
    caller can resume with raised limits.
    """

    def __init__(self, message, window=None, searched_up_to=None):
        super().__init__(message)
        self.window = window
        self.searched_up_to = searched_up_to
