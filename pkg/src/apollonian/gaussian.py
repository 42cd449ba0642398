"""Exact complex arithmetic over the rationals (Gaussian rationals)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Tuple


@dataclass(frozen=True, slots=True)
class GaussianRational:
    re: Fraction
    im: Fraction

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __add__(self, o: "GaussianRational") -> "GaussianRational":
        o = _coerce(o)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o: "GaussianRational") -> "GaussianRational":
        o = _coerce(o)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, o) -> "GaussianRational":
        o = _coerce(o)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o) -> "GaussianRational":
        o = _coerce(o)
        d = o.norm()
        if d == 0:
            raise ZeroDivisionError("division by complex zero")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def as_pair(self) -> Tuple[Fraction, Fraction]:
        return (self.re, self.im)


def _coerce(v) -> GaussianRational:
    if isinstance(v, GaussianRational):
        return v
    return GaussianRational(v, 0)


def gaussian_isqrt(a: int, b: int) -> Optional[Tuple[int, int]]:
    """Return ``(m, n)`` with ``(m + n i)**2 == a + b i``, or None if no such Gaussian integer.

    Of the two roots the one with ``m > 0`` (or ``m == 0, n >= 0``) is returned.
    """
    c2 = a * a + b * b
    c = isqrt(c2)
    if c * c != c2:
        return None
    if (c + a) % 2:
        return None
    m2, n2 = (c + a) // 2, (c - a) // 2
    m, n = isqrt(m2), isqrt(n2)
    if m * m != m2 or n * n != n2:
        return None
    if b < 0:
        n = -n
    if 2 * m * n != b:
        return None
    return (m, n)
