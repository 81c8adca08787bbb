"""Exact field arithmetic over the rationals and prime fields.

A FieldDescriptor names the coefficient field once; every Scalar carries
its descriptor plus a canonical payload: a fully reduced
fractions.Fraction for the rationals, a plain int in [0, p) for F_p.
Scalars from different descriptors never interoperate; mixing them
raises DescriptorMismatch instead of silently coercing.

Scalars are immutable and hashable, so they are safe to share across
threads; every operation here is pure.

Text encoding (used by the instance file format): a rational scalar is
written "a/b" or just "a", a prime-field scalar as a decimal integer in
[0, p).
"""

from __future__ import annotations

import enum
import operator
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "FieldKind",
    "FieldDescriptor",
    "Scalar",
    "rationals",
    "prime_field",
    "from_integer",
    "scalar_arith",
    "is_prime",
    "DescriptorMismatch",
    "DivisionByZero",
    "InvalidModulus",
]


class DescriptorMismatch(ValueError):
    """Two scalars from different fields met in one operation."""


class DivisionByZero(ZeroDivisionError):
    """Division by, or inversion of, the zero element."""


class InvalidModulus(ValueError):
    """Prime-field modulus is absent, too small, or composite."""


# Fixed Miller-Rabin bases: deterministic for all n < 3.3 * 10^24,
# which comfortably covers 64-bit moduli.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for moduli below 2^64.

    For larger n the same base set is used and the verdict is only
    overwhelmingly probable.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldKind(enum.Enum):
    RATIONAL = "rational"
    PRIME = "prime"


@dataclass(frozen=True)
class FieldDescriptor:
    """The coefficient field: Q, or F_p for a prime modulus p.

    The modulus is checked eagerly at construction; composite or
    undersized moduli are rejected.
    """

    kind: FieldKind
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind is FieldKind.PRIME:
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise InvalidModulus(f"modulus must be a prime >= 2, got {self.modulus!r}")
            if not is_prime(self.modulus):
                raise InvalidModulus(f"modulus {self.modulus} is not prime")
        else:
            if self.modulus is not None:
                raise InvalidModulus("the rational field takes no modulus")

    @property
    def is_prime_field(self) -> bool:
        return self.kind is FieldKind.PRIME

    def __str__(self) -> str:
        return "Q" if self.kind is FieldKind.RATIONAL else f"F_{self.modulus}"


def rationals() -> FieldDescriptor:
    return FieldDescriptor(FieldKind.RATIONAL)


def prime_field(p: int) -> FieldDescriptor:
    return FieldDescriptor(FieldKind.PRIME, p)


@dataclass(frozen=True, slots=True)
class Scalar:
    """One exact field element: a descriptor plus a canonical payload.

    Construction canonicalizes: ints handed to a rational scalar become
    Fractions, payloads of a prime-field scalar are reduced into [0, p).
    Re-canonicalizing is therefore the identity.
    """

    descriptor: FieldDescriptor
    value: int | Fraction

    def __post_init__(self) -> None:
        if self.descriptor.is_prime_field:
            if isinstance(self.value, Fraction):
                if self.value.denominator != 1:
                    raise TypeError("prime-field payload must be an integer")
                object.__setattr__(self, "value", int(self.value))
            object.__setattr__(self, "value", self.value % self.descriptor.modulus)
        elif not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.value

    def is_one(self) -> bool:
        return self.value == 1

    # -- arithmetic ----------------------------------------------------

    def _need(self, other: "Scalar") -> None:
        if other.descriptor != self.descriptor:
            raise DescriptorMismatch(f"{self.descriptor} vs {other.descriptor}")

    def __add__(self, other: "Scalar"):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._need(other)
        return Scalar(self.descriptor, self.value + other.value)

    def __sub__(self, other: "Scalar"):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._need(other)
        return Scalar(self.descriptor, self.value - other.value)

    def __mul__(self, other: "Scalar"):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._need(other)
        return Scalar(self.descriptor, self.value * other.value)

    def __truediv__(self, other: "Scalar"):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._need(other)
        return self * other.inv()

    def __neg__(self) -> "Scalar":
        return Scalar(self.descriptor, -self.value)

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero(f"cannot invert 0 in {self.descriptor}")
        if self.descriptor.is_prime_field:
            return Scalar(self.descriptor, pow(self.value, self.descriptor.modulus - 2, self.descriptor.modulus))
        return Scalar(self.descriptor, 1 / self.value)

    def __pow__(self, exponent: int) -> "Scalar":
        """Exact power with the 0^0 = 1 convention; negative exponents invert."""
        if exponent < 0:
            return self.inv() ** (-exponent)
        if self.descriptor.is_prime_field:
            return Scalar(self.descriptor, pow(self.value, exponent, self.descriptor.modulus))
        if self.is_zero():
            return one(self.descriptor) if exponent == 0 else self
        return Scalar(self.descriptor, self.value**exponent)

    # -- text encoding ---------------------------------------------------

    def to_text(self) -> str:
        if self.descriptor.is_prime_field:
            return str(self.value)
        if self.value.denominator == 1:
            return str(self.value.numerator)
        return f"{self.value.numerator}/{self.value.denominator}"

    @staticmethod
    def parse(descriptor: FieldDescriptor, text: str) -> "Scalar":
        """Parse the text encoding; integers outside [0, p) are reduced."""
        text = text.strip()
        try:
            if descriptor.is_prime_field:
                return Scalar(descriptor, int(text))
            return Scalar(descriptor, Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse {text!r} as an element of {descriptor}") from exc

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Scalar({self.descriptor}, {self.to_text()})"


def zero(descriptor: FieldDescriptor) -> Scalar:
    return Scalar(descriptor, 0)


def one(descriptor: FieldDescriptor) -> Scalar:
    return Scalar(descriptor, 1)


def from_integer(descriptor: FieldDescriptor, n: int) -> Scalar:
    """Canonical image of a signed integer in the field."""
    return Scalar(descriptor, n)


_UNARY = {"neg", "inv"}
_BINARY = {"add", "sub", "mul", "div"}


def scalar_arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Dispatch one field operation by name.

    ``op`` is one of add, sub, mul, div, neg, inv; ``b`` must be given
    exactly for the binary ops.
    """
    if op in _UNARY:
        if b is not None:
            raise ValueError(f"{op} is unary")
        return -a if op == "neg" else a.inv()
    if op in _BINARY:
        if b is None:
            raise ValueError(f"{op} needs a second operand")
        fn = {"add": operator.add, "sub": operator.sub, "mul": operator.mul, "div": operator.truediv}[op]
        return fn(a, b)
    raise ValueError(f"unknown operation {op!r}")
