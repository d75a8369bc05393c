"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: ConfigError -> 1, DataError and
DimensionError -> 2, NumericError -> 3.
"""


class SeqboostError(Exception):
    """Base class for all package errors."""


class ConfigError(SeqboostError):
    """Invalid configuration value (bad range, unknown option)."""


class DimensionError(SeqboostError):
    """Shape or length mismatch between numeric operands."""


class DataError(SeqboostError):
    """Problems with input data: files, parsing, insufficient length."""


class NumericError(SeqboostError):
    """Non-finite values or violated numeric contracts."""
