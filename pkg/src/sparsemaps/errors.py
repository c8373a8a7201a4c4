"""Exception types raised across the package."""


class SparsityError(Exception):
    """Base class for all package errors."""


class InvalidVertexError(SparsityError, IndexError):
    pass


class InvalidParametersError(SparsityError, ValueError):
    pass


class CountMismatchError(SparsityError, ValueError):
    """The edge count is not the one the operation needs."""

    def __init__(self, message, required=None, actual=None):
        super().__init__(message)
        self.required = required
        self.actual = actual


class PreconditionError(SparsityError, ValueError):
    pass


class BudgetExceededError(SparsityError):
    """An exhaustive computation would exceed its enumeration budget."""

    def __init__(self, message, count=None, budget=None):
        super().__init__(message)
        self.count = count
        self.budget = budget


class OracleViolationError(SparsityError):
    """An independence oracle answered inconsistently with matroid axioms."""


class NotTightError(SparsityError):
    """The graph is not tight for the requested parameters.

    ``witness`` is a vertex subset spanning too many edges, or ``None`` when
    the graph is sparse and only the edge count is off.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = None if witness is None else frozenset(witness)


class NotSparseError(NotTightError):
    """The graph is not sparse; ``witness`` is always present."""
