class DomainError(ValueError):
    """An input lies outside the domain where an operation is defined."""


class VerificationError(AssertionError):
    """An exact post-condition check failed."""
