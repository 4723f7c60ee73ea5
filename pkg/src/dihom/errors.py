"""Exception hierarchy shared by all dihom modules.

InputSyntaxError covers malformed text inputs (exit code 2 in the CLI);
DomainError covers well-formed inputs that violate an operation's
preconditions or a resource guard (exit code 1).
"""


class DihomError(Exception):
    pass


class InputSyntaxError(DihomError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DomainError(DihomError):
    pass


class InvalidComplexError(DomainError):
    pass


class UnboundedEnumerationError(DomainError):
    """Unbounded dipath or word enumeration requested on a cyclic structure."""


class EnumerationLimitError(DomainError):
    """The enumerated path/word set exceeded the configured cap."""


class SizeGuardError(DomainError):
    """A brute-force categorical search exceeded its size guard."""
