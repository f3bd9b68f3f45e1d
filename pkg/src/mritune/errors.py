"""Exception types shared across the package.

The CLI maps these onto exit codes (config -> 2, data format -> 3,
numerical -> 4), so raising the right class matters at module boundaries.
"""


class ConfigError(ValueError):
    """Invalid parameter, configuration value, or precondition violation."""


class PartitionError(ValueError):
    """A requested k-space partition cannot be satisfied."""


class DataFormatError(Exception):
    """A binary file is malformed. Carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class NumericalError(ArithmeticError):
    """A computation produced non-finite values."""
