"""Exception hierarchy shared by every module.

Each class name doubles as the error name printed by the CLI.
"""


class AutomorphismError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class NotPrime(AutomorphismError):
    pass


class DegreeTooLarge(AutomorphismError):
    pass


class FieldMismatch(AutomorphismError):
    pass


class DivisionByZero(AutomorphismError, ZeroDivisionError):
    pass


class NotCoprime(AutomorphismError):
    pass


class NotAUnit(AutomorphismError):
    pass


class MalformedTable(AutomorphismError):
    pass


class ZeroExponent(AutomorphismError):
    pass


class InvalidParameter(AutomorphismError, ValueError):
    """Parameter outside the domain (zero real part, non-finite, bad sign)."""


class InvalidBasis(AutomorphismError):
    pass


class LogOfZero(AutomorphismError):
    pass


class MalformedSpec(AutomorphismError):
    pass
