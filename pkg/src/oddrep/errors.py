"""Exception hierarchy.

Every error carries an ``exit_code`` so the command-line front end can map
failures onto its stable contract: 2 input error, 3 unsupported domain value,
4 resource budget.
"""

from __future__ import annotations


class OddrepError(Exception):
    exit_code = 2


class InputError(OddrepError, ValueError):
    """Malformed or inconsistent input (shapes, moduli, schema)."""

    exit_code = 2


class UnsupportedError(OddrepError):
    exit_code = 3


class BudgetError(OddrepError):
    exit_code = 4


# field
class NotPrime(InputError):
    pass


class ModulusMismatch(InputError):
    pass


class DivisionByZero(InputError, ZeroDivisionError):
    pass


class NotAUnit(InputError):
    pass


# linalg
class ShapeError(InputError):
    pass


# ortho
class DegenerateForm(InputError):
    pass


class NotASimilitude(InputError):
    pass


class IsotropicVector(InputError):
    pass


class NotAnIsometry(InputError):
    pass


class DecompositionFailed(OddrepError):
    pass


class OddDimensionRequired(InputError):
    pass


class NotOrthogonalShape(InputError):
    pass


# reptheory
class EvenDimensionRequired(InputError):
    pass


class SignCountError(InputError):
    pass


class NotAnInvolution(InputError):
    pass


class TraceOutOfRange(InputError):
    pass


class EnumerationBudgetExceeded(BudgetError):
    pass


# surface
class UnsupportedFiber(UnsupportedError):
    pass
