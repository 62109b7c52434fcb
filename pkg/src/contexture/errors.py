"""Exception hierarchy shared across the package."""


class ContextureError(Exception):
    """Base class for all errors raised by this package."""


class CorpusError(ContextureError):
    """Raised for malformed corpus or chunk-store files; messages name the line."""


class ConfigError(ContextureError):
    """Raised for invalid configuration values or unreadable backend assets."""


class TransportError(ContextureError):
    """A remote backend could not be reached or returned a failure status.

    Transport errors are retryable: the request may succeed if repeated.
    """


class ProtocolError(ContextureError):
    """A remote backend answered, but the response violates the wire contract."""
