"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument violates an operation's contract (width, range, length)."""


class StateError(RuntimeError):
    """An operation was invoked on an object in the wrong state."""


class ConfigError(ValueError):
    """A scenario or key configuration is invalid."""


class ProtocolError(ValueError):
    """A protocol message (digest, wrapped seed) is malformed."""


class IntegrityError(ValueError):
    """Decrypted or decoded data fails an integrity check."""


class InsufficientDataError(ValueError):
    """Not enough observed data to run the requested analysis."""
