"""Exception types shared across the package."""


class TreeSepError(Exception):
    """Base class for every error raised by this package."""


class InvalidTreeError(TreeSepError):
    """An operation that requires a valid tree received an invalid one."""


class ParamError(TreeSepError):
    """A precondition on user-supplied parameters failed.

    Carries the report that explains which inequality failed and by how
    much, under ``report`` (a ParamReport or PreconditionReport).
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InternalContradictionError(TreeSepError):
    """A condition the underlying guarantees rule out was observed.

    This always indicates a bug (or arithmetic drift beyond tolerance),
    never bad input; the message carries the state needed to debug it.
    """


class PeelStepError(TreeSepError):
    """A peeling step could not proceed; carries the trace so far."""

    def __init__(self, message, trace=()):
        super().__init__(message)
        self.trace = tuple(trace)


class DegenerateScheduleError(TreeSepError):
    """The per-step eta formula was evaluated at a zero denominator."""


class DegenerateIntervalError(TreeSepError):
    """The residue-weight window is undefined for this k."""


class BudgetExceededError(TreeSepError):
    """Exhaustive enumeration would exceed the configured budget."""


class ParseError(TreeSepError):
    """A tree file could not be parsed.

    ``kind`` distinguishes the failure: "malformed-count", "bad-weight",
    "bad-edge", "duplicate-edge", or "bad-format".
    """

    def __init__(self, kind, message):
        super().__init__(message)
        self.kind = kind
