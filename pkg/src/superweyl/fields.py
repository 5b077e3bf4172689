"""Field modes for quadratic spaces: Q, F_p and a symbolic algebraic closure."""
from __future__ import annotations

import math
from fractions import Fraction

from sympy import isprime
from sympy.ntheory import sqrt_mod

from .errors import InvalidField


class FieldMode:
    characteristic: int = 0
    name: str = ""

    def element(self, x):
        raise NotImplementedError

    def add(self, a, b):
        return self.element(a + b)

    def sub(self, a, b):
        return self.element(a - b)

    def mul(self, a, b):
        return self.element(a * b)

    def neg(self, a):
        return self.element(-a)

    def inv(self, a):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        return self.element(a) == 0

    def is_square(self, a) -> bool:
        """Whether ``a`` is a nonzero square."""
        raise NotImplementedError

    def sqrt(self, a):
        """A square root of ``a`` in the field, or ``None`` if there is none."""
        raise NotImplementedError

    def to_json(self, a):
        return int(a)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return type(self) is type(other) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


def _rational_sqrt(a: Fraction):
    if a < 0:
        return None
    n, d = a.numerator, a.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class Rationals(FieldMode):
    name = "Q"

    def element(self, x):
        # ints are kept as ints; they mix exactly with Fractions
        t = type(x)
        if t is int or t is Fraction:
            return x
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / Fraction(a)

    def is_square(self, a):
        a = Fraction(a)
        return a != 0 and _rational_sqrt(a) is not None

    def sqrt(self, a):
        return _rational_sqrt(Fraction(a))

    def to_json(self, a):
        a = Fraction(a)
        return a.numerator if a.denominator == 1 else str(a)


class PrimeField(FieldMode):
    def __init__(self, p: int):
        if p == 2 or not isprime(p):
            raise InvalidField(f"F_p needs an odd prime, got {p}")
        self.p = p
        self.characteristic = p
        self.name = f"Fp:{p}"

    def element(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, a):
        a = self.element(a)
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def is_square(self, a):
        # Euler's criterion
        a = self.element(a)
        return a != 0 and pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a):
        a = self.element(a)
        if a == 0:
            return 0
        return sqrt_mod(a, self.p)


class AlgebraicallyClosed(FieldMode):
    """Symbolic closure of Q (char 0) or F_p.

    Arithmetic happens in the prime field; every nonzero element counts as a
    square.  :meth:`sqrt` only returns roots that already live in the prime
    field; callers adjoin the others formally.
    """

    def __init__(self, char: int = 0):
        self.base = Rationals() if char == 0 else PrimeField(char)
        self.characteristic = char
        self.name = f"closed:{char}"
        self.element = self.base.element
        self.add, self.sub, self.mul, self.neg = self.base.add, self.base.sub, self.base.mul, self.base.neg

    def inv(self, a):
        return self.base.inv(a)

    def is_square(self, a):
        return not self.base.is_zero(a)

    def sqrt(self, a):
        return self.base.sqrt(a)

    def to_json(self, a):
        return self.base.to_json(a)


def parse_field(text: str) -> FieldMode:
    """``Q``, ``Fp:<p>`` or ``closed:<char>``."""
    t = text.strip()
    try:
        if t in ("Q", "QQ", "q"):
            return Rationals()
        head, _, arg = t.partition(":")
        if head.lower() in ("fp", "f") and arg:
            return PrimeField(int(arg))
        if head.lower() == "closed" and arg:
            char = int(arg)
            if char != 0 and (char == 2 or not isprime(char)):
                raise InvalidField(f"closed field needs char 0 or an odd prime, got {char}")
            return AlgebraicallyClosed(char)
    except ValueError as exc:
        if isinstance(exc, InvalidField):
            raise
        raise InvalidField(f"cannot parse field {text!r}") from exc
    raise InvalidField(f"cannot parse field {text!r}")
