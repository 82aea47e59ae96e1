"""Exception types shared across the package."""


class CoatNextError(Exception):
    """Base class for all package errors."""


class DimensionError(CoatNextError, ValueError):
    """Tensor shapes are incompatible with the requested operation."""


class ContractError(CoatNextError, ValueError):
    """A caller violated an operation's precondition."""


class ConfigurationError(CoatNextError, ValueError):
    """A config object or on-disk layout is invalid."""


class ValidationError(CoatNextError, ValueError):
    """Input data failed a consistency check."""


class NumericError(CoatNextError, RuntimeError):
    """A computation produced non-finite values."""


class CheckpointError(CoatNextError, ValueError):
    """A checkpoint file is corrupt or incompatible with the target model."""
