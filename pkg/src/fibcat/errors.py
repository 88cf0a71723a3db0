"""Exception types shared across the package."""


class FibcatError(Exception):
    pass


class InvalidInput(FibcatError, ValueError):
    """A malformed permutation, pattern, site, parameter or class id."""


class UnknownClass(InvalidInput):
    pass


class BadParameter(InvalidInput):
    """A family parameter ``k`` outside the admissible range."""


class CapExceeded(FibcatError, RuntimeError):
    """An enumeration would exceed a configured resource cap."""


class RuleError(FibcatError, ValueError):
    """A succession rule cannot produce a reachable label."""


class TruncationError(InvalidInput):
    def __init__(self, message, required):
        super().__init__(message)
        self.required = required
