"""Exception hierarchy shared by every stage of the pipeline."""


class GradedRegError(Exception):
    """Base class for all errors raised by gradedreg."""


class ContextError(GradedRegError):
    """Operands live in different rings (characteristic or variables differ)."""


class ParseError(GradedRegError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class UnsupportedInputError(GradedRegError):
    """Input outside the standard-graded scope (e.g. inhomogeneous ideal)."""


class PresentationNotMinimalError(GradedRegError):
    """An ideal generator of degree <= 1; the variable should be eliminated first."""


class ZeroRingError(GradedRegError):
    """The presented ideal is the unit ideal."""


class SearchExhaustedError(GradedRegError):
    """No degree-one nonzerodivisor was found within the allotted attempts."""


class PreconditionError(GradedRegError):
    pass


class TruncationError(GradedRegError):
    def __init__(self, message, min_window=None, min_degree=None):
        self.min_window = min_window
        self.min_degree = min_degree
        super().__init__(message)


class InternalInconsistencyError(GradedRegError):
    """Two independent routes to the same quantity disagree."""
