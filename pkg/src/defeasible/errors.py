"""Exception hierarchy shared by the library and the command-line driver."""


class DefeasibleError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DefeasibleError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


class ValidationError(DefeasibleError):
    """A theory violates one of the structural requirements (acyclic priorities, ...)."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class PreconditionError(DefeasibleError, ValueError):
    """An operation was applied outside its domain (e.g. alpha on a theory with defeaters)."""


class CapExceeded(DefeasibleError):
    """An exhaustive enumeration or product would exceed its configured bound."""


class BudgetExhausted(DefeasibleError):
    """Proof search gave up; this is not evidence that no proof exists."""
