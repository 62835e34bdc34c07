"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """A config value, buffer, or model violates its declared constraints."""


class InsufficientDataError(RuntimeError):
    """Not enough usable data to produce a result (e.g. no usable batches)."""


class SessionAbortedError(RuntimeError):
    """A screening session could not run to completion (e.g. fit-check timeout)."""
