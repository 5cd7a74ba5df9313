from typing import Optional


class BoolFunError(ValueError):
    """Base class for invalid Boolean-function inputs."""


class TruthTableFormatError(BoolFunError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedSizeError(BoolFunError):
    pass


class OrderOutOfRangeError(BoolFunError):
    pass


class UnbalancedFunctionError(BoolFunError):
    pass


class SwapPreconditionError(BoolFunError):
    pass


class ConfigError(ValueError):
    """Raised when a campaign configuration cannot be used."""
