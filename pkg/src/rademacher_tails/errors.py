class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class CapacityError(ValueError):
    """Request exceeds a hard resource cap (e.g. enumeration size)."""
