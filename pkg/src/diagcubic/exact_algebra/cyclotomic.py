"""Exact arithmetic in Q(zeta), zeta a primitive cube root of unity."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _rational(x):
    # integers stay ints: Fraction arithmetic is an order of magnitude slower
    if type(x) is int:
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


class Cyclotomic:
    """The element ``a + b*zeta`` with ``zeta**2 + zeta + 1 == 0``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _rational(a)
        self.b = _rational(b)

    @classmethod
    def coerce(cls, x) -> Cyclotomic:
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Rational)):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {x!r} to Cyclotomic")

    @classmethod
    def zeta_power(cls, k: int) -> Cyclotomic:
        k %= 3
        if k == 0:
            return cls(1, 0)
        if k == 1:
            return cls(0, 1)
        return cls(-1, -1)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __add__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(-self.a, -self.b)

    def __sub__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return Cyclotomic.coerce(other) - self

    def __mul__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        # zeta^2 = -1 - zeta
        bd = b * d
        return Cyclotomic(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def conjugate(self) -> Cyclotomic:
        # zeta -> zeta^2 = -1 - zeta
        return Cyclotomic(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> Cyclotomic:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        c = self.conjugate()
        return Cyclotomic(Fraction(c.a) / n, Fraction(c.b) / n)

    def __truediv__(self, other):
        return self * Cyclotomic.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclotomic(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def root_of_unity_exponent(self):
        """Return ``(sign, k)`` with ``self == sign * zeta**k``, or None."""
        for k in range(3):
            z = Cyclotomic.zeta_power(k)
            if self == z:
                return 1, k
            if self == -z:
                return -1, k
        return None

    def __repr__(self):
        return f"Cyclotomic({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return "ζ" if self.b == 1 else ("-ζ" if self.b == -1 else f"{self.b}ζ")
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        tail = "ζ" if mag == 1 else f"{mag}ζ"
        return f"({self.a}{sign}{tail})"


ZETA = Cyclotomic(0, 1)
