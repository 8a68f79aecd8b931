"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class SoftSetError(Exception):
    """Base class for every error raised by softcat.

    ``line`` is filled in by the workspace parser when the error can be
    traced back to a line of an input document.
    """

    line: int | None = None

    def __str__(self) -> str:
        msg = super().__str__()
        if self.line is not None:
            return f"line {self.line}: {msg}"
        return msg


class DuplicateParameter(SoftSetError):
    pass


class DuplicateElement(SoftSetError):
    pass


class ElementNotInUniverse(SoftSetError):
    pass


class UniverseMismatch(SoftSetError):
    pass


class MapNotTotal(SoftSetError):
    pass


class MapRangeInvalid(SoftSetError):
    pass


class SoftConditionViolated(SoftSetError):
    """The image of ``param`` in the source is not contained in the image
    of its value in the target."""

    def __init__(self, param: str, message: str | None = None) -> None:
        self.param = param
        super().__init__(message or f"soft condition violated at parameter {param!r}")


class CompositionMismatch(SoftSetError):
    pass


class NotAnIsomorphism(SoftSetError):
    def __init__(self, reason: str, param: str | None = None) -> None:
        self.reason = reason
        self.param = param
        super().__init__(reason)


class AlreadyEpi(SoftSetError):
    pass


class AlreadyMono(SoftSetError):
    pass


class NotASeparator(SoftSetError):
    pass


class NotACoseparator(SoftSetError):
    pass


class MorphismsEqual(SoftSetError):
    pass


class IncompatiblePair(SoftSetError):
    pass


class WorkspaceSyntaxError(SoftSetError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(message)
        self.line = line


class UnknownReference(SoftSetError):
    pass


class DuplicateName(SoftSetError):
    pass
