"""Light-cone view of Descartes quadruples and the matching modular-plane picture.

Everything is exact (``Fraction`` / :class:`GaussianRational`); floats only
appear when a dataset is written out.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .descartes import ParamTuple
from .enumeration import ClassificationRow, enumerate_range
from .errors import BothZeroError, PoleImageError, PoleProjectionError, ZeroKError
from .gaussian import GaussianRational
from .spinor import Spinor, cross, dot, norm_sq

# Descartes relation as a quadratic form: -1 on the diagonal, +1 elsewhere.
DESCARTES_FORM = tuple(tuple(-1 if i == j else 1 for j in range(4)) for i in range(4))

DUST_COLUMNS = ("B", "k", "n", "mu", "X", "Y")


class _PointAtInfinity:
    __slots__ = ()

    def __repr__(self) -> str:
        return "POINT_AT_INFINITY"


POINT_AT_INFINITY = _PointAtInfinity()


@dataclass(frozen=True)
class MinkowskiVector:
    x: Fraction
    y: Fraction
    z: Fraction
    t: Fraction

    def interval(self) -> Fraction:
        """``x^2 + y^2 + z^2 - t^2``; zero on the light cone."""
        return self.x ** 2 + self.y ** 2 + self.z ** 2 - self.t ** 2


@dataclass(frozen=True)
class HermitianMatrix2:
    """``[[k, mu - iB], [mu + iB, n]]`` stored as its four integers."""

    diag_k: int
    diag_n: int
    off_mu: int
    off_B: int

    def determinant(self) -> int:
        return self.diag_k * self.diag_n - (self.off_mu ** 2 + self.off_B ** 2)

    def entries(self) -> Tuple[Tuple[complex, complex], Tuple[complex, complex]]:
        upper = complex(self.off_mu, -self.off_B)
        return ((complex(self.diag_k), upper), (upper.conjugate(), complex(self.diag_n)))

    def conjugate_off_diagonal(self) -> "HermitianMatrix2":
        return HermitianMatrix2(self.diag_k, self.diag_n, self.off_mu, -self.off_B)

    def agrees_with(self, other: "HermitianMatrix2") -> bool:
        """Entrywise equality up to complex conjugation of the off-diagonal pair."""
        return self == other or self == other.conjugate_off_diagonal()


def quadratic_form_value(q: Sequence[int]) -> int:
    bs = list(q)
    return sum(bs[i] * DESCARTES_FORM[i][j] * bs[j] for i in range(4) for j in range(4))


def diagonalize(t: ParamTuple) -> MinkowskiVector:
    B, k, n, mu = t
    return MinkowskiVector(Fraction(B), Fraction(mu), Fraction(n - k, 2), Fraction(n + k, 2))


def _on_sphere(v: MinkowskiVector) -> Tuple[Fraction, Fraction, Fraction]:
    if v.t <= 0:
        raise PoleProjectionError("projection needs t > 0")
    return v.x / v.t, v.y / v.t, v.z / v.t


def celestial_north(v: MinkowskiVector) -> Tuple[Fraction, Fraction]:
    """Stereographic image from the north pole; equals ``(B/k, mu/k)``."""
    x1, y1, z1 = _on_sphere(v)
    if z1 == 1:
        raise PoleProjectionError("point sits on the north pole (k = 0)")
    return x1 / (1 - z1), y1 / (1 - z1)


def celestial_south(v: MinkowskiVector) -> Tuple[Fraction, Fraction]:
    """Stereographic image from the south pole; equals ``(B/n, mu/n)``."""
    x1, y1, z1 = _on_sphere(v)
    if z1 == -1:
        raise PoleProjectionError("point sits on the south pole (n = 0)")
    return x1 / (1 + z1), y1 / (1 + z1)


def modular_point(t: ParamTuple) -> GaussianRational:
    """Ratio of the principal basis vectors, ``mu/k + i B/k``."""
    if t.k < 1:
        raise ZeroKError("modular point needs k >= 1")
    return GaussianRational(Fraction(t.mu, t.k), Fraction(t.B, t.k))


def in_fundamental_belt(z: GaussianRational) -> bool:
    """Closed right half of the modular fundamental domain."""
    return z.im > 0 and 0 <= z.re <= Fraction(1, 2) and z.norm() >= 1


def mobius_act(m: Sequence[Sequence[int]], z: GaussianRational) -> GaussianRational:
    (a, b), (c, d) = m
    if a * d - b * c not in (1, -1):
        raise ValueError("matrix must be unimodular")
    den = c * z + d
    if den.is_zero():
        raise PoleImageError("z is mapped to infinity")
    return (a * z + b) / den


S_MATRIX = ((0, -1), (1, 0))


def coincidence_check(t: ParamTuple) -> bool:
    """Both celestial projections agree with the modular picture of the same lattice.

    North: ``(X, Y)`` equals ``(Im z, Re z)``. South: ``z -> -1/z`` followed by
    the reflection ``Re -> -Re`` lands on ``(Y, X)`` of the south projection.
    """
    v = diagonalize(t)
    z = modular_point(t)
    X, Y = celestial_north(v)
    north_ok = (X, Y) == (z.im, z.re)
    w = mobius_act(S_MATRIX, z)
    w = GaussianRational(-w.re, w.im)
    Xs, Ys = celestial_south(v)
    south_ok = (Xs, Ys) == (w.im, w.re) == (Fraction(t.B, t.n), Fraction(t.mu, t.n))
    return north_ok and south_ok and (X, Y) == (Fraction(t.B, t.k), Fraction(t.mu, t.k))


def hermitian_from_spinors(a: Spinor, b: Spinor) -> HermitianMatrix2:
    """Outer product of the Pauli spinor ``(a, b)`` with itself."""
    a, b = Spinor.of(a), Spinor.of(b)
    return HermitianMatrix2(norm_sq(a), norm_sq(b), dot(a, b), cross(a, b))


def hermitian_from_params(t: ParamTuple) -> HermitianMatrix2:
    return HermitianMatrix2(t.k, t.n, t.mu, t.B)


def hermitian_from_curvatures(q: Sequence[int]) -> HermitianMatrix2:
    """Matrix written directly in curvatures: off-diagonal ``(B0+B1+B2-B3)/2 + i B0``.

    ``q`` is read in the given order ``(B0, B1, B2, B3)``.
    """
    b0, b1, b2, b3 = q
    twice_mu = b0 + b1 + b2 - b3
    if twice_mu % 2:
        raise ValueError(f"{tuple(q)} is not a Descartes quadruple")
    return HermitianMatrix2(b0 + b1, b0 + b2, twice_mu // 2, -b0)


def projective_point(a: Spinor, b: Spinor):
    """``b / a`` as Gaussian rationals, or :data:`POINT_AT_INFINITY` when ``a == 0``."""
    a, b = Spinor.of(a), Spinor.of(b)
    za, zb = GaussianRational(a.x, a.y), GaussianRational(b.x, b.y)
    if za.is_zero():
        if zb.is_zero():
            raise BothZeroError("both spinors vanish")
        return POINT_AT_INFINITY
    return zb / za


@dataclass(frozen=True)
class DustPoint:
    B: int
    k: int
    n: int
    mu: int
    X: Fraction
    Y: Fraction


def dust_dataset(bmax: int, projection: str = "north",
                 rows: Optional[Iterable[ClassificationRow]] = None) -> List[DustPoint]:
    if projection not in ("north", "south"):
        raise ValueError("projection must be 'north' or 'south'")
    project = celestial_north if projection == "north" else celestial_south
    points = []
    for row in rows if rows is not None else enumerate_range(bmax):
        t = row.params
        X, Y = project(diagonalize(t))
        points.append(DustPoint(t.B, t.k, t.n, t.mu, X, Y))
    return points


_DEC = Context(prec=12, rounding=ROUND_HALF_EVEN)


def format_decimal(x: Fraction) -> str:
    """12 significant digits, round-half-even, never in exponent form."""
    d = _DEC.divide(Decimal(x.numerator), Decimal(x.denominator))
    s = format(d, "f")
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return s


def dust_to_csv(points: Iterable[DustPoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(DUST_COLUMNS)
    for p in points:
        w.writerow([p.B, p.k, p.n, p.mu, format_decimal(p.X), format_decimal(p.Y)])
    return buf.getvalue()


def dust_to_json(points: Iterable[DustPoint]) -> str:
    data = [
        {"B": p.B, "k": p.k, "n": p.n, "mu": p.mu, "X": format_decimal(p.X), "Y": format_decimal(p.Y)}
        for p in points
    ]
    return json.dumps(data, sort_keys=True, indent=1) + "\n"
