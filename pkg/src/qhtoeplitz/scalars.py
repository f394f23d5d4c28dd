"""Exact complex scalars with rational real and imaginary parts."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union["GaussQ", Fraction, int]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("not an exact rational: %r" % (x,))


class GaussQ:
    """A Gaussian rational ``re + im*i``.

    Immutable and hashable.  Plain ints and Fractions mix freely in
    arithmetic and compare equal to the matching real value.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", to_fraction(re))
        object.__setattr__(self, "im", to_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussQ is immutable")

    @classmethod
    def coerce(cls, x) -> "GaussQ":
        if isinstance(x, GaussQ):
            return x
        return cls(x, 0)

    # -- predicates -----------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        try:
            o = GaussQ.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussQ.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = GaussQ.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        try:
            o = GaussQ.coerce(other)
        except TypeError:
            return NotImplemented
        if o.im == 0:
            return GaussQ(self.re * o.re, self.im * o.re)
        return GaussQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Squared modulus ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussQ":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GaussQ division by zero")
        return GaussQ(self.re / n, -self.im / n)

    def __truediv__(self, other):
        try:
            o = GaussQ.coerce(other)
        except TypeError:
            return NotImplemented
        if o.im == 0:
            if o.re == 0:
                raise ZeroDivisionError("GaussQ division by zero")
            return GaussQ(self.re / o.re, self.im / o.re)
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = GaussQ.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = GaussQ(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussQ":
        return GaussQ(self.re, -self.im)

    # -- comparison / hashing ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussQ):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def sort_key(self):
        return (self.re, self.im)

    # -- conversion -----------------------------------------------------

    def real_fraction(self) -> Fraction:
        if self.im != 0:
            raise ValueError("%s is not real" % self)
        return self.re

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return "GaussQ(%s, %s)" % (self.re, self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "%si" % (self.im,)
        sign = "+" if self.im > 0 else "-"
        return "(%s%s%si)" % (self.re, sign, abs(self.im))


ZERO = GaussQ(0)
ONE = GaussQ(1)
I = GaussQ(0, 1)


def gq(x) -> GaussQ:
    return GaussQ.coerce(x)


def frac_str(x: Fraction) -> str:
    """Serialise a rational as ``"num/den"`` (always with a denominator)."""
    x = to_fraction(x)
    return "%d/%d" % (x.numerator, x.denominator)


def gq_json(x: GaussQ) -> dict:
    x = gq(x)
    return {"re": frac_str(x.re), "im": frac_str(x.im)}
