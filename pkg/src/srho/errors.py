"""Exception types raised across the package."""


class SrhoError(ValueError):
    """Base class for every domain error raised by :mod:`srho`."""


# numerics
class NoSignChange(SrhoError):
    pass


class NoConvergence(SrhoError, ArithmeticError):
    pass


class InvalidInterval(SrhoError):
    pass


# series
class NonzeroConstantTerm(SrhoError):
    pass


class SigmaOutOfRange(SrhoError):
    pass


class BadOrder(SrhoError):
    pass


class ParamOutOfDomain(SrhoError):
    pass


class OutsideAccuracyDomain(SrhoError):
    pass


class ROutOfRange(SrhoError):
    pass


# region
class COutOfRange(SrhoError):
    pass


class HplDomain(SrhoError):
    pass


# radii
class ZetaOutOfRange(SrhoError):
    pass


class BetaOutOfRange(SrhoError):
    pass


class ParamOrder(SrhoError):
    pass


class UnsupportedSigns(SrhoError):
    pass


class AOutOfRange(SrhoError):
    pass


class BadN(SrhoError):
    pass


# verify
class BadParams(SrhoError):
    pass
