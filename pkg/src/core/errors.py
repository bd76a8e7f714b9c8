"""
Exception hierarchy for fps-transcend

UsageError and DomainError map to the CLI exit codes 2 and 3; an
InvariantViolation means an exact identity failed and is reported as a
failed check.
"""


class FpsError(Exception):
    """Base class for all fps-transcend errors"""


class UsageError(FpsError):
    """A precondition, guardrail or flag combination was violated"""


class PreconditionError(UsageError):
    """An operation was called outside its stated preconditions"""


class TruncationMismatchError(UsageError):
    """Binary series operation on operands of different truncation order"""


class OracleLimitError(UsageError):
    """Brute-force enumeration requested beyond its hard caps"""


class DomainError(FpsError):
    """Input value outside the domain of an operation (bad JSON, bad number, ...)"""


class DivisionError(DomainError):
    """Series division by a divisor with vanishing constant term"""


class NotInvertibleError(DivisionError):
    """C X = D has no series solution X"""


class InvariantViolation(FpsError):
    """An exact identity that must always hold did not"""
