"""Exception hierarchy shared by the solvers and the CLI."""


class GWError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(GWError, ValueError):
    pass


class InvalidCell(InvalidArgument):
    """A relation was asked to solve a cell outside its range of validity."""


class MissingEntry(GWError, LookupError):
    """A dimensionally valid coefficient was requested before being computed."""

    def __init__(self, key):
        super().__init__(f"coefficient not yet computed: {key}")
        self.key = key


class ConsistencyViolation(GWError):
    """A write-once table entry was overwritten with a different value."""


class MalformedFile(GWError, ValueError):
    def __init__(self, path, lineno, message):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno


class SolverError(GWError):
    """The genus-0 linear system is rank deficient or inconsistent."""

    def __init__(self, degree, message, residual=None):
        super().__init__(f"degree {degree}: {message}")
        self.degree = degree
        self.residual = residual
