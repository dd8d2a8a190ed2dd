"""Exception hierarchy shared by every layer of the package."""

from __future__ import annotations


class WeakHopfError(Exception):
    """Base class for all errors raised by weakhopf."""


class FieldError(WeakHopfError, ValueError):
    """Invalid field descriptor or scalar literal."""


class DimensionMismatch(WeakHopfError, ValueError):
    pass


class NotIdempotent(WeakHopfError, ValueError):
    pass


class NotInvertible(WeakHopfError, ValueError):
    pass


class InvalidStructure(WeakHopfError, ValueError):
    """A structure map violates a construction-time law.

    ``law`` names the violated law and ``witness`` is the lowest basis index
    where the two sides differ (``None`` for shape errors).
    """

    def __init__(self, law: str, witness: int | None = None, detail: str = ""):
        self.law = law
        self.witness = witness
        msg = f"{law} violated"
        if witness is not None:
            msg += f" at basis index {witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class InvalidPresentation(WeakHopfError, ValueError):
    """A combinatorial presentation fails its own invariants."""


class NotIPLoop(InvalidPresentation):
    def __init__(self, message: str, triple: tuple[int, ...] | None = None):
        self.triple = triple
        super().__init__(message)


class NotGroupoid(InvalidPresentation):
    pass


class InconsistentPresentation(InvalidPresentation):
    pass


class ImproperIdeal(WeakHopfError):
    """The bigroupoid ideal is the whole algebra, so the quotient is zero."""


class NotComoduleIso(WeakHopfError, ValueError):
    pass


class CertificateFailure(WeakHopfError):
    def __init__(self, equation: str, checks=()):
        self.equation = equation
        self.checks = tuple(checks)
        super().__init__(f"fundamental certificate failed at {equation}")


class ParseError(WeakHopfError, ValueError):
    pass
