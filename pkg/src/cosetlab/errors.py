class CosetLabError(Exception):
    """Base class for library errors."""


class UnsupportedType(CosetLabError):
    pass


class SizeCap(CosetLabError):
    """A computation would exceed the configured size cap."""


class NotParabolic(CosetLabError):
    pass


class NotIdeal(CosetLabError):
    pass


class NonGeneric(CosetLabError):
    pass


class ShellingViolation(CosetLabError):
    """Raised when a facet order fails the shelling condition (a bug signal)."""
