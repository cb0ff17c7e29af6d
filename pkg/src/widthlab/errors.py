"""Exception types shared across the toolkit."""


class WidthlabError(Exception):
    """Base class for all widthlab errors."""


class DomainError(WidthlabError, ValueError):
    """An argument is outside the operation's stated domain."""


class SizeLimitExceeded(WidthlabError):
    """Input exceeds the size cap of an exact solver or generator."""


class MalformedInput(WidthlabError):
    """Edge-list text violates the input format.

    `line` is the 1-based line number of the first offending line
    (0 when the problem is not attributable to a single line).
    """

    def __init__(self, message, line=0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class InvalidSeparator(WidthlabError):
    """A vertex set that was required to be a balanced separator is not one."""


class NotChordal(WidthlabError):
    """A chordal-only operation received a non-chordal graph."""


class InvariantViolation(WidthlabError):
    """A postcondition guaranteed by a proved statement failed at runtime.

    Raising this means either the implementation or the statement it relies
    on is wrong; it is never expected on valid inputs.
    """
