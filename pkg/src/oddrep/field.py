"""Prime fields F_l and the square-class group F_l^x / (F_l^x)^2."""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from functools import lru_cache

from .errors import DivisionByZero, ModulusMismatch, NotAUnit, NotPrime

#: Largest accepted modulus (exclusive). Keeps l^2 inside a signed 64-bit word.
MAX_MODULUS = 1 << 31


class SmallPrimeWarning(UserWarning):
    """Emitted when l is at or below the explicit bound 2(2N+1)."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field of residues modulo an odd prime ``modulus >= 5``."""

    modulus: int

    def __post_init__(self):
        p = self.modulus
        if not isinstance(p, int) or isinstance(p, bool):
            raise NotPrime(f"modulus must be an int, got {p!r}")
        if p < 5:
            raise NotPrime(f"modulus must be a prime >= 5, got {p}")
        if p >= MAX_MODULUS:
            raise NotPrime(f"modulus {p} exceeds the machine-word cap 2**31")
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(int(value) % self.modulus, self)

    def __repr__(self):
        return f"GF({self.modulus})"

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)

    def elements(self):
        return (FieldElement(v, self) for v in range(self.modulus))

    def units(self):
        return (FieldElement(v, self) for v in range(1, self.modulus))

    def centered(self, value: int) -> int:
        """Representative of ``value`` in the symmetric range (-l/2, l/2)."""
        v = int(value) % self.modulus
        return v - self.modulus if v > self.modulus // 2 else v

    def inv(self, a: int) -> int:
        a %= self.modulus
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return pow(a, -1, self.modulus)

    def legendre(self, a: int) -> int:
        """Euler's criterion: 1, -1, or 0."""
        a %= self.modulus
        if a == 0:
            return 0
        r = pow(a, (self.modulus - 1) // 2, self.modulus)
        return 1 if r == 1 else -1

    def square_class(self, a: int) -> SquareClass:
        s = self.legendre(a)
        if s == 0:
            raise NotAUnit("0 has no square class")
        return SquareClass.TRIVIAL if s == 1 else SquareClass.NONTRIVIAL

    def nonsquare(self) -> int:
        """Smallest positive nonsquare residue."""
        return _smallest_nonsquare(self.modulus)


@lru_cache(maxsize=None)
def _smallest_nonsquare(p: int) -> int:
    for a in range(2, p):
        if pow(a, (p - 1) // 2, p) == p - 1:
            return a
    raise AssertionError("unreachable for odd p")


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.modulus:
            raise ValueError("value must be the reduced representative")

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ModulusMismatch(
                    f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        return arith(self, self._coerce(other), "add")

    __radd__ = __add__

    def __sub__(self, other):
        return arith(self, self._coerce(other), "sub")

    def __rsub__(self, other):
        return arith(self._coerce(other), self, "sub")

    def __mul__(self, other):
        return arith(self, self._coerce(other), "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * invert(self._coerce(other))

    def __neg__(self):
        return self.field(-self.value)

    def __pow__(self, k: int):
        if k < 0:
            return invert(self) ** (-k)
        return self.field(pow(self.value, k, self.field.modulus))

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.field.modulus
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field == other.field
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.modulus))

    def __repr__(self):
        return f"{self.value} (mod {self.field.modulus})"


class SquareClass(enum.Enum):
    TRIVIAL = 1
    NONTRIVIAL = -1

    def __mul__(self, other: SquareClass) -> SquareClass:
        if not isinstance(other, SquareClass):
            return NotImplemented
        return SquareClass(self.value * other.value)

    @classmethod
    def product(cls, classes) -> SquareClass:
        out = cls.TRIVIAL
        for c in classes:
            out = out * c
        return out


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Add, subtract or multiply two elements of the same prime field."""
    if a.field != b.field:
        raise ModulusMismatch(f"{a.field} vs {b.field}")
    p = a.field.modulus
    if op == "add":
        v = a.value + b.value
    elif op == "sub":
        v = a.value - b.value
    elif op == "mul":
        v = a.value * b.value
    else:
        raise ValueError(f"unknown op {op!r}")
    return FieldElement(v % p, a.field)


def invert(a: FieldElement) -> FieldElement:
    if a.value == 0:
        raise DivisionByZero("0 has no inverse")
    return FieldElement(pow(a.value, -1, a.field.modulus), a.field)


def square_class(a: FieldElement) -> SquareClass:
    """Coset of ``a`` in F_l^x / (F_l^x)^2 by Euler's criterion."""
    if a.value == 0:
        raise NotAUnit("0 has no square class")
    return a.field.square_class(a.value)


def check_prime_bound(field: PrimeField, N: int) -> bool:
    """Warn when ``l <= 2(2N+1)``; return True when the bound holds."""
    bound = 2 * (2 * N + 1)
    if field.modulus <= bound:
        warnings.warn(
            f"l = {field.modulus} <= 2(2N+1) = {bound} for N = {N}; "
            "large-l hypotheses are not met",
            SmallPrimeWarning, stacklevel=2)
        return False
    return True
