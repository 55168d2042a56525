"""Exception hierarchy shared by all modules."""


class HiddenGraphError(Exception):
    """Base class for every error raised by this package."""


class DuplicateProbe(HiddenGraphError):
    """A vertex pair was probed twice: the bookkeeping failed upstream."""


class SelfProbe(HiddenGraphError):
    pass


class Exhausted(HiddenGraphError):
    """No destinations remain in an interval set."""


class NotPresent(HiddenGraphError):
    """A vertex was removed from an interval set that no longer holds it."""


class InvalidK(HiddenGraphError, ValueError):
    pass


class MalformedLine(HiddenGraphError, ValueError):
    def __init__(self, lineno: int, line: str):
        super().__init__(f"line {lineno}: cannot parse {line!r}")
        self.lineno = lineno
        self.line = line


class EmptyInput(HiddenGraphError, ValueError):
    pass


class Ungraphable(HiddenGraphError):
    """A degree sequence could not be realised as a simple graph."""
