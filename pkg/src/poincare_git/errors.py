"""Exception hierarchy.

Every error raised by the library derives from :class:`PoincareError` and
carries the process exit code the command line front end should use, plus
an optional location: a JSON pointer into the problem file (``path``) or the
label of the computation step that failed (``step``).
"""

from __future__ import annotations


class PoincareError(Exception):
    exit_code = 3

    def __init__(self, message: str, *, path: str | None = None, step: str | None = None):
        super().__init__(message)
        self.message = message
        self.path = path
        self.step = step
        # steps completed before the failure, filled in by the tracing layer
        self.trace: list = []

    @property
    def kind(self) -> str:
        return type(self).__name__

    def __str__(self) -> str:
        where = []
        if self.path is not None:
            where.append(f"at {self.path}")
        if self.step is not None:
            where.append(f"in step '{self.step}'")
        if where:
            return f"{self.message} ({', '.join(where)})"
        return self.message


class SchemaError(PoincareError):
    """Problem file does not validate."""

    exit_code = 1


class NotPolynomial(PoincareError):
    """A rational function claimed to be polynomial has a nonzero remainder."""


class EmptyQuotient(PoincareError):
    """``d <= 0``: the unstable locus is not a proper subvariety."""


class InvalidCodimension(PoincareError):
    pass


class ClassifyingSpaceNotFinite(PoincareError):
    pass


class EmptyDecomposition(PoincareError):
    pass


class SsNotS(PoincareError):
    """Formula requires semistability to coincide with stability."""


class StagesNotMonotone(PoincareError):
    pass


class RecursionLimit(PoincareError):
    pass


class TraceMismatch(PoincareError):
    pass
