"""Exception types shared across the package."""


class MinGenusError(ValueError):
    """Base class for domain errors raised by this package."""


class ContextMismatchError(MinGenusError):
    """Two classes live over base surfaces of different genus."""


class InvalidIndexError(MinGenusError):
    """A handle index is outside 1..g or a move is malformed."""


class UnsupportedContextError(MinGenusError):
    """An operation was called for a genus it is not defined for."""


class DomainError(MinGenusError):
    """An argument lies outside an operation's domain (e.g. the zero class)."""


class PreconditionError(MinGenusError):
    """A surface move or replay was asked for something it cannot do."""


class BudgetExceededError(MinGenusError):
    """Word search ran past its node budget.

    ``stats`` carries the partial search statistics.
    """

    def __init__(self, msg, stats=None):
        super().__init__(msg)
        self.stats = dict(stats or {})


class ParseError(MinGenusError):
    """A class, move or word literal could not be parsed."""
