"""Exception types shared across the package."""


class MbagrowError(Exception):
    """Base class for every error raised by this package."""


class InvalidConfigError(MbagrowError, ValueError):
    """A growth or experiment configuration violates its invariants."""


class InvalidArgumentError(MbagrowError, ValueError):
    """An argument is out of range or malformed."""


class InvalidStateError(MbagrowError, RuntimeError):
    """The operation is undefined for the current graph state."""


class ResourceLimitError(MbagrowError, RuntimeError):
    """A computation would exceed its configured size cap."""


class EdgeListParseError(MbagrowError, ValueError):
    """An edge-list file is malformed; ``lineno`` is 1-based."""

    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
