"""Exception hierarchy shared by every module.

Each error carries an optional ``witness`` (JSON-serializable) describing the
first violation found, and a ``code`` used as the CLI exit status.
"""

from __future__ import annotations


class FoneRepError(Exception):
    code = 2

    def __init__(self, message: str = "", witness=None):
        super().__init__(message or self.__class__.__name__)
        self.witness = witness

    def to_json(self) -> dict:
        out = {"error": self.__class__.__name__, "message": str(self)}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class ValidationError(FoneRepError):
    pass


class CapExceeded(FoneRepError):
    code = 3


# fvect
class NonInjective(ValidationError):
    pass


class BadDomain(ValidationError):
    pass


class DimMismatch(ValidationError):
    pass


class GroupMismatch(ValidationError):
    pass


class NotMono(ValidationError):
    pass


class NotEpi(ValidationError):
    pass


# monoid
class NotAssociative(ValidationError):
    pass


class NoIdentity(ValidationError):
    pass


class IncompleteTable(ValidationError):
    pass


class CyclicQuiver(ValidationError):
    pass


class RelationInconsistent(ValidationError):
    pass


class ZeroElement(ValidationError):
    pass


class NotIdempotent(ValidationError):
    pass


class NotInverse(ValidationError):
    pass


# rep
class NotFunctorial(ValidationError):
    pass


class BadIdentity(ValidationError):
    pass


class DimTooLarge(CapExceeded):
    pass


class NotInductiveHere(ValidationError):
    pass


# cmp
class NotLeftInductive(ValidationError):
    pass


class BaseNotSimple(ValidationError):
    pass


class GroupTooLarge(CapExceeded):
    pass


class FreenessViolated(ValidationError):
    pass


class NotNormal(ValidationError):
    pass


class ScalarMismatch(ValidationError):
    pass


# ordered
class AxiomViolated(ValidationError):
    pass
