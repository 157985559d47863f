"""Exact scalars: Gaussian rationals a + b*i with a, b in Q.

Every coefficient in this package lives in Q(i).  Diagram reductions only
ever multiply by -2 and by fourth roots of unity, and the projector
recursions divide by small integers, so a pair of Fractions with schoolbook
arithmetic is all we need.  No floats anywhere.

String format is "a+bi" with rationals printed as n/d and a unit imaginary
coefficient left implicit:

>>> print(GaussianRational.parse("1/2-i") * GaussianRational.parse("i"))
1+1/2i
"""

from __future__ import annotations

import re
from fractions import Fraction


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re: Fraction | int = 0, im: Fraction | int = 0):
        if type(re) is not Fraction:
            re = Fraction(re)
        if type(im) is not Fraction:
            im = Fraction(im)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: GaussianRational) -> GaussianRational:
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussianRational) -> GaussianRational:
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: GaussianRational) -> GaussianRational:
        if not isinstance(other, GaussianRational):
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        # real factors dominate in practice; skip the cross terms for them
        if not b:
            return GaussianRational(a * c, a * d)
        if not d:
            return GaussianRational(a * c, b * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    def __truediv__(self, other: GaussianRational) -> GaussianRational:
        return self * other.inverse()

    def inverse(self) -> GaussianRational:
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __pow__(self, k: int) -> GaussianRational:
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, q: Fraction | int) -> GaussianRational:
        q = Fraction(q)
        return GaussianRational(self.re * q, self.im * q)

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_zero(self) -> bool:
        return not self

    # -- parsing / printing ----------------------------------------------

    _TERM = re.compile(r"\s*(?P<sign>[+-]?)\s*(?P<mag>\d+(?:/\d+)?)?(?P<unit>i)?")

    @classmethod
    def parse(cls, text: str) -> GaussianRational:
        """Parse "a+bi" and the usual degenerate forms ("-2", "i", "3/4i").

        >>> GaussianRational.parse("-1/2+2i")
        GaussianRational(Fraction(-1, 2), Fraction(2, 1))
        """
        re_part = im_part = None
        pos = 0
        while pos < len(text):
            m = cls._TERM.match(text, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"bad scalar literal: {text!r}")
            sign = -1 if m.group("sign") == "-" else 1
            mag, unit = m.group("mag"), m.group("unit")
            if mag is None and unit is None:
                raise ValueError(f"bad scalar literal: {text!r}")
            value = sign * (Fraction(mag) if mag is not None else 1)
            if unit:
                if im_part is not None:
                    raise ValueError(f"bad scalar literal: {text!r}")
                im_part = value
            else:
                if re_part is not None:
                    raise ValueError(f"bad scalar literal: {text!r}")
                re_part = value
            pos = m.end()
        if re_part is None and im_part is None:
            raise ValueError(f"bad scalar literal: {text!r}")
        return cls(re_part or 0, im_part or 0)

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        if self.re:
            parts.append(str(self.re))
        if self.im:
            mag = abs(self.im)
            body = "i" if mag == 1 else f"{mag}i"
            if self.im < 0:
                parts.append("-" + body)
            elif parts:
                parts.append("+" + body)
            else:
                parts.append(body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
MINUS_ONE = GaussianRational(-1)
TWO = GaussianRational(2)
MINUS_TWO = GaussianRational(-2)
I = GaussianRational(0, 1)
MINUS_I = GaussianRational(0, -1)
HALF = GaussianRational(Fraction(1, 2))

# i**k for k mod 4; handy when accumulating winding phases.
I_POWERS = (ONE, I, MINUS_ONE, MINUS_I)


def from_rational(q: Fraction | int) -> GaussianRational:
    return GaussianRational(q)
