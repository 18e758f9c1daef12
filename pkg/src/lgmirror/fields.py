"""Coefficient fields: exact rationals and prime fields.

Coefficients are stored as plain Python values owned by a field object:
``fractions.Fraction`` for :data:`QQ` and ``int`` in ``[0, p)`` for
:class:`GF`.  The field object does the arithmetic, so polynomials never
mix representations.
"""

from __future__ import annotations

import random
from fractions import Fraction


class RationalField:
    """The field of rational numbers with ``Fraction`` elements."""

    characteristic = 0

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def convert(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot convert {value!r} to QQ")

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return a * self.inv(b)

    def is_zero(self, a) -> bool:
        return a == 0

    def is_one(self, a) -> bool:
        return a == 1

    def is_negative(self, a) -> bool:
        return a < 0

    def format(self, a) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def random_element(self, rng: random.Random, bound: int = 10) -> Fraction:
        return Fraction(rng.randint(-bound, bound))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class GF:
    """Prime field ``Z/p``; elements are ints reduced into ``[0, p)``."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def convert(self, value) -> int:
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, str):
            return self.convert(Fraction(value))
        raise TypeError(f"cannot convert {value!r} to {self!r}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a) -> bool:
        return a == 0

    def is_one(self, a) -> bool:
        return a == 1

    def is_negative(self, a) -> bool:
        # printing uses the symmetric range; storage stays in [0, p)
        return a > self.p // 2

    def format(self, a) -> str:
        return str(a)

    def random_element(self, rng: random.Random, bound: int | None = None) -> int:
        return rng.randrange(self.p)


QQ = RationalField()


def field_from_spec(spec: str):
    """Parse a field designator: ``q`` or ``zp:<prime>``."""
    spec = spec.strip().lower()
    if spec in ("q", "qq"):
        return QQ
    if spec.startswith("zp:"):
        return GF(int(spec[3:]))
    raise ValueError(f"unknown field {spec!r}; expected 'q' or 'zp:<prime>'")
