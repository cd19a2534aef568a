"""Exception hierarchy shared by every module."""


class ConalignError(Exception):
    """Base class for library errors."""


class ParseError(ConalignError, ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ContractViolation(ConalignError, ValueError):
    """A caller broke an operation's precondition."""


class PreconditionError(ContractViolation):
    """The instance does not satisfy an algorithm's structural hypothesis."""


class ResourceLimitError(ConalignError, RuntimeError):
    """A search exceeded its configured size or node budget."""


class OracleLimitExceeded(ResourceLimitError):
    pass


class BudgetExceeded(ResourceLimitError):
    """Branch and bound ran out of nodes. ``best`` holds the best set found so far."""

    def __init__(self, message: str, best: frozenset[int] = frozenset()):
        super().__init__(message)
        self.best = best


class StructuralViolation(ConalignError, AssertionError):
    """A proven structural property failed on a concrete graph.

    This always indicates a bug somewhere in the pipeline; ``witness`` carries
    the offending vertex set so it can be minimised and reported.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
