"""Shared exception types."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class UniverseMismatch(ValueError):
    """Two trees from different universes were mixed in one operation."""


class ResourceLimit(RuntimeError):
    """An enumeration exceeded its item budget."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
