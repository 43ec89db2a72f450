"""
Root exception type for rspac.

Every area raises its own subclass (FieldError, RsCodecError, ...) defined
next to the code that raises it.
"""


class RspacError(Exception):
    """Base class for all rspac errors."""
    pass


class ConfigError(RspacError, ValueError):
    """Raised when a configuration file, override or data file is invalid."""
    pass
