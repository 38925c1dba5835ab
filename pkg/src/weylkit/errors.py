"""Exception hierarchy shared by every weylkit module.

Each exception carries a stable ``code`` (the class name) so the CLI can
emit machine-readable error records.
"""
from __future__ import annotations


class WeylkitError(Exception):
    """Base class for all domain errors."""

    @property
    def code(self) -> str:
        return type(self).__name__

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


class InputError(WeylkitError, ValueError):
    """Malformed JSON input or configuration."""


# gcm
class GCMError(WeylkitError, ValueError):
    pass


class NotSquare(GCMError):
    pass


class BadDiagonal(GCMError):
    pass


class BadSign(GCMError):
    pass


class AsymmetricZero(GCMError):
    pass


class Decomposable(GCMError):
    pass


class BadCoxeterMatrix(GCMError):
    pass


# weyl
class BadGenerator(WeylkitError, ValueError):
    pass


class SearchBudgetExceeded(WeylkitError, RuntimeError):
    pass


class SameWall(WeylkitError, ValueError):
    pass


class NotCrystallographic(WeylkitError, ValueError):
    pass


class WrongType(WeylkitError, ValueError):
    pass


class NotARealRoot(WeylkitError, ValueError):
    pass


# gprod
class SpecError(WeylkitError, ValueError):
    pass


class BadSyllable(WeylkitError, ValueError):
    pass


class InfiniteVertexGroup(WeylkitError, ValueError):
    pass


class WordNotReduced(WeylkitError, ValueError):
    pass


# witness
class HypothesesFailed(WeylkitError):
    pass


class FingerprintMismatch(WeylkitError):
    pass
