"""Exception taxonomy. The CLI maps these onto distinct exit codes."""


class AdanervError(Exception):
    """Base class for all errors raised by this package."""


class VideoIOError(AdanervError):
    """Missing files, inconsistent frame sizes, truncated raw data."""


class ConfigError(AdanervError):
    """Invalid or inconsistent configuration."""


class BitstreamError(AdanervError):
    """Malformed, corrupt, or truncated bitstream."""


class NumericalError(AdanervError):
    """Non-finite values encountered during training or evaluation."""
