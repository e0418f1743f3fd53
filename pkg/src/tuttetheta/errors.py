"""Exception types shared across the package."""


class CapExceeded(RuntimeError):
    """A configured enumeration or feasibility cap would be exceeded."""


class DecodeError(ValueError):
    """A polynomial term could not be decoded against a weight matrix."""


class FormatError(ValueError):
    """Malformed input file; carries the offending line number when known."""

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
