"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An input lies outside the domain of the requested map or operation."""


class ResourceLimitError(RuntimeError):
    """A requested size exceeds the configured resource guard."""


class VerificationError(AssertionError):
    """A computed result disagrees with a reference value."""
