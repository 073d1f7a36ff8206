"""Exception hierarchy shared by the library and the CLI."""


class TableauLabError(Exception):
    """Base class for all library errors."""


class ShapeError(TableauLabError, ValueError):
    """A diagram is malformed or does not fit where it is required to."""


class DomainError(TableauLabError, ValueError):
    """An argument lies outside the domain of an operation."""


class ValidationError(TableauLabError, ValueError):
    """A tableau (or pair of tableaux) fails a required property."""


class MembershipError(ValidationError):
    """A permutation lies outside the class the bijection is defined on."""


class ResourceError(TableauLabError, RuntimeError):
    """A brute-force request exceeds the configured size cap."""
