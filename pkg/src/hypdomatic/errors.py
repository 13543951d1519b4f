"""Exception hierarchy shared by all modules."""


class HypergraphError(Exception):
    """Base class for every error raised by this package."""


class InvalidParams(HypergraphError, ValueError):
    pass


class IndexOutOfRange(HypergraphError, IndexError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class EmptyEdge(HypergraphError, ValueError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class DuplicateEdge(HypergraphError, ValueError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class Infeasible(HypergraphError):
    """No total dominating set exists (some item has no neighbour)."""


class BudgetExceeded(HypergraphError):
    """The search ran out of time or nodes.

    ``best`` holds the best (non-optimal) result found so far, if any.
    """

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


class TooLarge(HypergraphError, ValueError):
    pass


class NotApplicable(HypergraphError):
    pass


class SearchFailed(HypergraphError):
    pass


class Overflow(HypergraphError, OverflowError):
    pass


class ParseError(HypergraphError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
