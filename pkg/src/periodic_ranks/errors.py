"""Exception hierarchy shared by the library and the command line."""


class RankError(Exception):
    """Base class for every error raised by this package."""


class DomainError(RankError, ValueError):
    """An argument lies outside the domain of the operation."""


class UnsupportedError(RankError):
    """The request is well formed but has no closed-form answer here.

    Raised for non-coprime base/period pairs in the automatic and regular
    magic-number reports, whose characterization is an open problem.
    """


class ResourceError(RankError):
    """An enumeration or search would exceed its configured budget."""

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required
