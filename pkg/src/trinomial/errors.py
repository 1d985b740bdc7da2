"""Exception hierarchy shared by the arithmetic core, constructions and CLI."""

from __future__ import annotations


class TrinomialError(Exception):
    """Base class for every error raised by this package."""


# -- arithmetic ------------------------------------------------------------

class DegenerateModulus(TrinomialError):
    """The requested extension has a defining polynomial of degree <= 1."""


class ZeroDivisor(TrinomialError):
    """An element of a reducible tower level turned out to be a zero divisor.

    ``factor_coeffs`` is a nontrivial monic proper factor of the modulus at
    ``level``, with coefficients at ``level - 1`` of ``tower``.  Callers split
    the tower along it and retry in both branches.
    """

    def __init__(self, tower, level, factor_coeffs):
        self.tower = tower
        self.level = level
        self.factor_coeffs = tuple(factor_coeffs)
        name = tower.levels[level - 1].name
        super().__init__(f"zero divisor modulo the defining polynomial of {name!r}")

    @property
    def factor(self):
        from .upoly import UPoly

        return UPoly(self.tower.truncate(self.level - 1), self.factor_coeffs)


class NotAFactor(TrinomialError):
    pass


class NotDivisible(TrinomialError):
    pass


class NotASquare(TrinomialError):
    pass


# -- integer subroutines ---------------------------------------------------

class NotCoprime(TrinomialError):
    pass


class NotRepresentable(TrinomialError):
    pass


class LimitExceeded(TrinomialError):
    pass


# -- model / verification --------------------------------------------------

class ValidationError(TrinomialError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ShapeMismatch(TrinomialError):
    pass


class NotOnHypersurface(TrinomialError):
    pass


class PreconditionViolated(TrinomialError):
    pass


class NotSH(TrinomialError):
    pass


# -- constructions ---------------------------------------------------------

class VerificationFailed(TrinomialError):
    pass


class SeedInvalid(TrinomialError):
    pass


class ConstructionFailed(TrinomialError):
    """No dynamic-evaluation branch produced a square cofactor."""

    def __init__(self, message, cofactor=None, branches=()):
        super().__init__(message)
        self.cofactor = cofactor
        self.branches = list(branches)


class DatabaseCorrupt(TrinomialError):
    pass


class ConstructionImpossible(TrinomialError):
    """The decision procedure rules the requested curve out."""


class NotRational(ConstructionImpossible):
    pass


class NoHorizontalCurve(ConstructionImpossible):
    pass


class NotPlatonic(ConstructionImpossible):
    pass


# -- file formats ----------------------------------------------------------

class ParseError(ValidationError):
    pass
