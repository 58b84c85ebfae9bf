"""Shared exception types."""


class GrigError(Exception):
    pass


class WordParseError(GrigError, ValueError):
    """Raised on malformed word input; carries the offending position."""

    def __init__(self, text, position, message):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class PreconditionError(GrigError, ValueError):
    pass


class CapExceeded(GrigError, RuntimeError):
    """A resource cap was hit; ``partial`` holds whatever was computed."""

    def __init__(self, message, partial=None):
        self.partial = partial
        super().__init__(message)
