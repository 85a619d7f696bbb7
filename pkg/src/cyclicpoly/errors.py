"""Exception hierarchy shared by the library and the CLI."""


class CyclicError(Exception):
    """Base class for all errors raised by cyclicpoly."""


class ParameterError(CyclicError, ValueError):
    """(v, d) outside the admissible domain d >= 2, v >= d + 1."""


class IndexDomainError(CyclicError, IndexError):
    """A face-dimension index outside [-1, d - 1]."""


class DomainError(CyclicError, ValueError):
    """An operation called outside its stated hypotheses."""


class ResourceGuardError(CyclicError, RuntimeError):
    """A brute-force computation refused because it would exceed its cap."""
