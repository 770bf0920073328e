"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the domain where a function is defined."""


class TableExhaustedError(ValueError):
    """A query reaches past the limit a precomputed table was built for."""


class ConfigError(ValueError):
    """Configuration is invalid or too small for the requested evaluation."""


class PrecisionError(ArithmeticError):
    """Requested accuracy cannot be certified; ``radius`` is what is achievable."""

    def __init__(self, message: str, radius: float):
        super().__init__(message)
        self.radius = radius
