"""Exact coefficient rings: the integers, the integers mod p, and the rationals.

Elements are immutable and always kept in canonical form (residues in
``[0, p)``, fractions in lowest terms), so equality is structural.

>>> Z = RingSpec.parse("Z/6")
>>> Z(4) + Z(5)
RingElement(Z/6, 3)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

from .errors import MixedRings, NotInvertible, RingParseError

INTEGERS = "Z"
INTEGERS_MOD = "Z/p"
RATIONALS = "Q"

Scalar = Union[int, Fraction, "RingElement"]


@dataclass(frozen=True)
class RingSpec:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == INTEGERS_MOD:
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise RingParseError(f"modulus must be an integer >= 2, got {self.modulus!r}")
        elif self.kind in (INTEGERS, RATIONALS):
            if self.modulus is not None:
                raise RingParseError(f"{self.kind} takes no modulus")
        else:
            raise RingParseError(f"unknown ring kind {self.kind!r}")

    @classmethod
    def integers(cls) -> RingSpec:
        return cls(INTEGERS)

    @classmethod
    def mod(cls, p: int) -> RingSpec:
        return cls(INTEGERS_MOD, p)

    @classmethod
    def rationals(cls) -> RingSpec:
        return cls(RATIONALS)

    @classmethod
    def parse(cls, text: str) -> RingSpec:
        text = text.strip()
        if text == "Z":
            return cls.integers()
        if text == "Q":
            return cls.rationals()
        if text.startswith("Z/"):
            try:
                p = int(text[2:])
            except ValueError:
                raise RingParseError(f"bad modulus in ring {text!r}") from None
            return cls.mod(p)
        raise RingParseError(f"unknown ring {text!r}; expected 'Z', 'Z/<p>' or 'Q'")

    def __str__(self) -> str:
        if self.kind == INTEGERS_MOD:
            return f"Z/{self.modulus}"
        return self.kind

    @property
    def is_field(self) -> bool:
        if self.kind == RATIONALS:
            return True
        if self.kind == INTEGERS_MOD:
            from sympy import isprime

            return bool(isprime(self.modulus))
        return False

    def canonical(self, value: Scalar):
        """Coerce ``value`` into this ring's canonical carrier (int or Fraction)."""
        if isinstance(value, RingElement):
            if value.ring != self:
                raise MixedRings(self, value.ring)
            return value.value
        if isinstance(value, bool):
            value = int(value)
        if self.kind == INTEGERS:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{value} is not an integer")
                value = value.numerator
            if not isinstance(value, int):
                raise TypeError(f"cannot coerce {value!r} into Z")
            return value
        if self.kind == INTEGERS_MOD:
            p = self.modulus
            if isinstance(value, Fraction):
                den = value.denominator % p
                if gcd(den, p) != 1:
                    raise ValueError(f"denominator of {value} is not invertible mod {p}")
                return value.numerator * pow(den, -1, p) % p
            if not isinstance(value, int):
                raise TypeError(f"cannot coerce {value!r} into Z/{p}")
            return value % p
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into Q")

    def __call__(self, value: Scalar) -> RingElement:
        return RingElement(self, self.canonical(value))

    @property
    def zero(self) -> RingElement:
        return self(0)

    @property
    def one(self) -> RingElement:
        return self(1)

    def parse_element(self, text: str) -> RingElement:
        text = str(text).strip().replace("−", "-")
        try:
            if "/" in text:
                if self.kind == INTEGERS:
                    raise ValueError("fractions are not elements of Z")
                return self(Fraction(text))
            return self(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise RingParseError(f"cannot parse {text!r} as an element of {self}: {exc}") from None


class RingElement:
    """An element of a :class:`RingSpec`; use ``ring(value)`` to build one."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: RingSpec, value):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise MixedRings(self.ring, other.ring)
            return other.value
        return self.ring.canonical(other)

    def _wrap(self, value) -> RingElement:
        if self.ring.kind == INTEGERS_MOD:
            value %= self.ring.modulus
        return RingElement(self.ring, value)

    def __add__(self, other):
        return self._wrap(self.value + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.value - self._other(other))

    def __rsub__(self, other):
        return self._wrap(self._other(other) - self.value)

    def __mul__(self, other):
        return self._wrap(self.value * self._other(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.value)

    def __truediv__(self, other):
        if not isinstance(other, RingElement):
            other = self.ring(other)
        return self * invert(other)

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.ring.canonical(other)
            except (ValueError, TypeError):
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __repr__(self) -> str:
        return f"RingElement({self.ring}, {self})"

    def __str__(self) -> str:
        return str(self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def is_unit(self) -> bool:
        return try_invert(self) is not None


def add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def try_invert(x: RingElement) -> RingElement | None:
    """Return the multiplicative inverse of ``x``, or None if ``x`` is not a unit."""
    ring, v = x.ring, x.value
    if ring.kind == INTEGERS:
        return x if v in (1, -1) else None
    if ring.kind == INTEGERS_MOD:
        if gcd(v, ring.modulus) != 1:
            return None
        return RingElement(ring, pow(v, -1, ring.modulus))
    if v == 0:
        return None
    return RingElement(ring, 1 / v)


def invert(x: RingElement) -> RingElement:
    y = try_invert(x)
    if y is None:
        raise NotInvertible(x)
    return y
