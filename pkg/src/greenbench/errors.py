"""Exception types shared across the package."""


class GreenbenchError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(GreenbenchError):
    """Operands are defined over state sets of different sizes."""


class ResourceLimitError(GreenbenchError):
    """A configured size cap was exceeded."""


class ParseError(GreenbenchError):
    """Malformed text input."""


class InternalError(GreenbenchError):
    """An internal invariant was violated; indicates a bug."""
