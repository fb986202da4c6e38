"""Exception types raised across the package."""


class AHomotopyError(Exception):
    """Base class for every error raised by this package."""


class InvalidGraph(AHomotopyError, ValueError):
    pass


class InvalidMap(AHomotopyError, ValueError):
    pass


class CompositionError(AHomotopyError, ValueError):
    pass


class ResourceLimit(AHomotopyError, RuntimeError):
    """An enumeration or search exceeded its configured cap."""


class InternalLimit(AHomotopyError, RuntimeError):
    """A search that is expected to succeed ran out of room.

    Raised instead of reporting a negative answer that is not backed by a
    certificate.
    """


class NotAPath(AHomotopyError, ValueError):
    pass


class ConcatError(AHomotopyError, ValueError):
    pass


class InvalidInput(AHomotopyError, ValueError):
    pass


class InvalidTarget(AHomotopyError, ValueError):
    pass


class InvalidCone(AHomotopyError, ValueError):
    pass


class ParseError(AHomotopyError, ValueError):
    def __init__(self, message, line=0, column=0):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
