"""Exception types. Each carries the CLI exit code it maps to."""


class RotsignError(Exception):
    exit_code = 1


class ParseError(RotsignError, ValueError):
    exit_code = 2


class OrderMismatch(RotsignError, ValueError):
    exit_code = 2


class ReducibleError(RotsignError, ValueError):
    """Input matrix (or graph) is not irreducible (connected).

    ``components`` holds the strongly connected components, when known.
    """

    exit_code = 3

    def __init__(self, message, components=None):
        super().__init__(message)
        self.components = components


class NoClosedPath(ReducibleError):
    """The digraph has no closed path, so its period is undefined."""


class BaseMismatch(RotsignError, ValueError):
    exit_code = 4


class CapExceeded(RotsignError, ValueError):
    exit_code = 5


class SolverError(RotsignError, RuntimeError):
    """The numeric eigensolver failed."""
