"""Exception hierarchy shared by every module."""


class CbraidError(Exception):
    """Base class; the CLI maps these to exit code 1."""


class UsageError(CbraidError):
    """Bad input supplied by the caller (CLI exit code 2)."""


class UnknownToken(UsageError):
    pass


class TokenOutOfRange(UsageError):
    pass


class ZNotAllowed(UsageError):
    pass


class BadParams(UsageError):
    pass


class BadK(UsageError):
    pass


class ParamMismatch(UsageError):
    pass


class GroupTooLarge(CbraidError):
    pass


class IntervalTooLarge(CbraidError):
    pass


class NotInInterval(CbraidError):
    pass


class NoCommonMultiple(CbraidError):
    pass


class LatticeViolation(CbraidError):
    pass


class NotCoprime(CbraidError):
    pass


class TooLong(CbraidError):
    pass


class MatrixTooLarge(CbraidError):
    pass


class CapExceeded(CbraidError):
    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


class ZeroRelation(UsageError):
    pass


class IncompleteBasis(CbraidError):
    pass


class InfiniteDimensional(CbraidError):
    pass


class UnsupportedCase(UsageError):
    pass


class BadSpec(UsageError):
    pass


class SingularSpecialization(CbraidError):
    pass
