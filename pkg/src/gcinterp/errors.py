"""Exception hierarchy.

Errors fall in two groups that the CLI maps to distinct exit codes:
input/usage errors (malformed files, unknown names) and precondition
violations (non-poised sets, degenerate arrangements, ...).
"""


class GCInterpError(Exception):
    """Base class for all package errors."""


class UsageError(GCInterpError):
    pass


class PreconditionError(GCInterpError):
    pass


class ParseError(UsageError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class UnknownFamily(UsageError):
    pass


class UnknownSuite(UsageError):
    pass


class IdenticalPoints(PreconditionError):
    pass


class DuplicateNode(PreconditionError):
    pass


class DegreeOverflow(PreconditionError):
    pass


class WrongCardinality(PreconditionError):
    pass


class NotPoised(PreconditionError):
    pass


class NotGC(PreconditionError):
    pass


class IndexOutOfRange(PreconditionError, IndexError):
    pass


class PreconditionViolation(PreconditionError):
    pass


class DegenerateConfiguration(PreconditionError):
    pass


class DegenerateArrangement(PreconditionError):
    pass


class BatchViolation(PreconditionError):
    pass


class SingularMatrix(PreconditionError):
    pass
