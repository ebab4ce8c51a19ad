"""Exact arithmetic in the real quadratic field Q(sqrt 5)."""

import re
from fractions import Fraction

_PATTERN = re.compile(r"^(-?\d+(?:/\d+)?)([+-]\d+(?:/\d+)?)\*sqrt5$")


class QSqrt5:
    """The number ``a + b*sqrt(5)`` with rational ``a`` and ``b``.

    Instances are immutable and always reduced, so equal numbers hash
    equally. Ordering is the exact real ordering.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QSqrt5 is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, QSqrt5):
            return other
        if isinstance(other, (int, Fraction)):
            return QSqrt5(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QSqrt5(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt5(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QSqrt5(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QSqrt5(self.a * other.a + 5 * self.b * other.b,
                      self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def sign(self):
        a, b = self.a, self.b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with 5 b^2
        diff = a * a - 5 * b * b
        return sa if diff > 0 else (sb if diff < 0 else 0)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * 5 ** 0.5

    def __repr__(self):
        return f"QSqrt5({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        sign = "+" if self.b >= 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*sqrt5"

    @classmethod
    def parse(cls, text):
        m = _PATTERN.match(text)
        if m:
            return cls(Fraction(m.group(1)), Fraction(m.group(2)))
        return cls(Fraction(text))


PHI = QSqrt5(Fraction(1, 2), Fraction(1, 2))


def parse_number(text):
    """Inverse of ``str`` for ints, fractions and ``QSqrt5`` values."""
    if "sqrt5" in text:
        return QSqrt5.parse(text)
    value = Fraction(text)
    return int(value) if value.denominator == 1 else value
