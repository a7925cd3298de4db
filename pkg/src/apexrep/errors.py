"""Exception hierarchy shared by every module of the package."""


class ApexRepError(Exception):
    """Base class for all errors raised by apexrep."""


class InvalidParameterError(ApexRepError, ValueError):
    """A numeric parameter (subdivision length, target k, ...) is out of range."""


class InvalidInputError(ApexRepError, ValueError):
    """The input object violates an operation's precondition (e.g. non-planar graph)."""


class UnsupportedSizeError(ApexRepError, ValueError):
    """The construction is only defined for graphs with at least four vertices."""


class GraphParseError(ApexRepError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InternalConsistencyError(ApexRepError, RuntimeError):
    """An impossible state was reached; indicates a bug, never bad input."""


class ContractViolationError(ApexRepError, RuntimeError):
    """An arrangement does not satisfy the structure an operation relies on."""
