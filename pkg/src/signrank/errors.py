"""Exception types shared across the package."""


class SignRankError(Exception):
    """Base class for all package-specific errors."""


class GraphParseError(SignRankError, ValueError):
    """Malformed graph input (edge list or graph6)."""


class InvalidAssignmentError(SignRankError, ValueError):
    """An edge assignment violates its contract (zero value, wrong domain)."""


class PreconditionError(SignRankError, ValueError):
    """An operation was called outside its stated preconditions."""


class ResourceCapError(SignRankError, RuntimeError):
    """A configured resource cap (size limit, term cap, node budget) was hit."""
