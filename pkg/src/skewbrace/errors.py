"""Diagnosis exceptions.

Every failure carries a ``witness``: the element indices that exhibit the
violation, so callers (and the CLI) can print something actionable.
"""


class AlgebraError(ValueError):
    """Base class for every structural diagnosis raised by the package."""

    def __init__(self, message="", witness=None):
        super().__init__(message or type(self).__name__)
        self.witness = witness

    def to_dict(self):
        d = {"error": type(self).__name__, "message": str(self)}
        if self.witness is not None:
            d["witness"] = _jsonable(self.witness)
        return d


def _jsonable(w):
    if isinstance(w, (list, tuple)):
        return [_jsonable(x) for x in w]
    return w


class ShapeError(AlgebraError):
    pass


# group tables
class NotAssociative(AlgebraError):
    pass


class NoIdentityAtZero(AlgebraError):
    pass


class NoInverse(AlgebraError):
    pass


class NotLatin(AlgebraError):
    pass


# maps and actions
class NotHomomorphism(AlgebraError):
    pass


class NotAutomorphism(AlgebraError):
    pass


class NotMultiplicative(AlgebraError):
    pass


class NotUnital(AlgebraError):
    pass


class NotSection(AlgebraError):
    pass


# digroups and braces
class SizeMismatch(AlgebraError):
    pass


class NotGroupLaw(AlgebraError):
    pass


class Axiom2Fail(AlgebraError):
    pass


class NotABrace(AlgebraError):
    pass


class BoundExceeded(AlgebraError):
    pass


class SearchBoundExceeded(BoundExceeded):
    pass


class BadSkewingIndex(AlgebraError):
    pass


class InternalCheckFail(AlgebraError):
    """A check that a theorem guarantees failed: an implementation bug."""


# subobjects, quotients
class NotSubobject(AlgebraError):
    pass


class NotAnIdeal(AlgebraError):
    pass


class WellDefinednessFail(InternalCheckFail):
    pass


# extensions
class NotAbelianKernel(AlgebraError):
    pass


class NotExact(AlgebraError):
    pass


class SequenceCheckFail(AlgebraError):
    pass


class CodomainMismatch(AlgebraError):
    pass


class DirectionMismatch(AlgebraError):
    pass


class IncompatibleDirection(AlgebraError):
    pass
