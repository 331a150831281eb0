"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals."""

from fractions import Fraction
from numbers import Rational

ExactScalar = Fraction


def to_scalar(value):
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty scalar")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_scalar(value):
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GaussRat:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", to_scalar(re))
        object.__setattr__(self, "im", to_scalar(im))

    def __setattr__(self, key, value):
        raise AttributeError("GaussRat is immutable")

    @classmethod
    def coerce(cls, value):
        if isinstance(value, GaussRat):
            return value
        if isinstance(value, complex):
            raise TypeError("floating complex values are not exact")
        return cls(to_scalar(value), 0)

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def is_real(self):
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __add__(self, other):
        try:
            other = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussRat.coerce(other) - self

    def __mul__(self, other):
        try:
            other = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = GaussRat.coerce(other)
        except TypeError:
            return NotImplemented
        n = other.abs2()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussRat(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        return GaussRat.coerce(other) / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussRat(1) / (self ** (-k))
        result = GaussRat(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussRat({format_scalar(self.re)}, {format_scalar(self.im)})"

    def __str__(self):
        if self.im == 0:
            return format_scalar(self.re)
        if self.re == 0:
            return f"{format_scalar(self.im)}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{format_scalar(self.re)}{sign}{format_scalar(abs(self.im))}*i"


def exact_conjugate(value):
    if isinstance(value, GaussRat):
        return value.conjugate()
    return value
