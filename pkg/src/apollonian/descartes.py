"""Descartes quadruples and their construction from spinor pairs."""
from __future__ import annotations

from math import gcd, isqrt
from typing import Iterable, NamedTuple, Tuple

from .errors import (
    NegativeRadicandError,
    NonIntegralError,
    NonIntegralMuError,
    NotCoprimeError,
    NotEvertedError,
)
from .spinor import Spinor, cross, dot, norm_sq


class DescartesQuadruple(tuple):
    """Four integer curvatures kept in ascending order.

    Subclasses ``tuple`` so quadruples compare equal to plain tuples and
    serialise to JSON as arrays. Validity is *not* enforced on construction;
    use :func:`is_descartes`.
    """

    __slots__ = ()

    def __new__(cls, curvatures: Iterable[int]):
        bs = sorted(int(b) for b in curvatures)
        if len(bs) != 4:
            raise ValueError(f"a Descartes quadruple needs 4 curvatures, got {len(bs)}")
        return super().__new__(cls, bs)

    @classmethod
    def of(cls, *bs: int) -> "DescartesQuadruple":
        return cls(bs)

    def __repr__(self) -> str:
        return "DescartesQuadruple(%d, %d, %d, %d)" % tuple(self)

    def to_json(self) -> list[int]:
        return list(self)


class ParamTuple(NamedTuple):
    """Solution ``(B, k, n, mu)`` of ``B**2 + mu**2 == k*n``."""

    B: int
    k: int
    n: int
    mu: int

    def is_solution(self) -> bool:
        return self.B * self.B + self.mu * self.mu == self.k * self.n

    def is_maximal(self) -> bool:
        return 0 <= self.mu and 3 * self.mu * self.mu <= self.B * self.B and 2 * self.mu <= self.k <= self.n

    def to_json(self) -> dict:
        return {"B": self.B, "k": self.k, "n": self.n, "mu": self.mu}


def descartes_residual(bs: Iterable[int]) -> int:
    """``(sum)**2 - 2*(sum of squares)``; zero exactly on Descartes quadruples."""
    bs = list(bs)
    s = sum(bs)
    return s * s - 2 * sum(b * b for b in bs)


def is_descartes(q: Iterable[int]) -> bool:
    return descartes_residual(q) == 0


def fourth_curvatures(a: int, b: int, c: int) -> Tuple[int, int]:
    """Both tangent completions ``a+b+c -/+ 2*sqrt(ab+bc+ca)``, smaller first.

    Raises :class:`NonIntegralError` carrying the exact radicand when it is
    not a perfect square.
    """
    radicand = a * b + b * c + c * a
    if radicand < 0:
        raise NegativeRadicandError(radicand)
    r = isqrt(radicand)
    if r * r != radicand:
        raise NonIntegralError(radicand)
    s = a + b + c
    return (s - 2 * r, s + 2 * r)


def conjugate(q: Iterable[int], index: int) -> DescartesQuadruple:
    """Swap curvature ``q[index]`` for the other tangent completion of the remaining three."""
    bs = list(q)
    if not 0 <= index < 4:
        raise IndexError(index)
    others = sum(bs) - bs[index]
    bs[index] = 2 * others - bs[index]
    return DescartesQuadruple(bs)


def from_spinors(a: Spinor, b: Spinor) -> Tuple[DescartesQuadruple, DescartesQuadruple]:
    """Everted quadruples ``(-B, B+|a|^2, B+|b|^2, B+|a+b|^2)`` and its ``a-b`` conjugate."""
    a, b = Spinor.of(a), Spinor.of(b)
    B = abs(cross(a, b))
    head = (-B, B + norm_sq(a), B + norm_sq(b))
    return (
        DescartesQuadruple(head + (B + norm_sq(a + b),)),
        DescartesQuadruple(head + (B + norm_sq(a - b),)),
    )


def from_spinors_curl(a: Spinor, b: Spinor) -> Tuple[DescartesQuadruple, DescartesQuadruple]:
    """Quadruples built from the vanishing-curl relation instead of the corona picture.

    ``(|b|^2 + a.b, |a|^2 + a.b, -a.b, |a|^2 + |b|^2 + a.b +/- 2 a x b)``.
    """
    a, b = Spinor.of(a), Spinor.of(b)
    d, c = dot(a, b), cross(a, b)
    na, nb = norm_sq(a), norm_sq(b)
    head = (nb + d, na + d, -d)
    base = na + nb + d
    return (
        DescartesQuadruple(head + (base + 2 * c,)),
        DescartesQuadruple(head + (base - 2 * c,)),
    )


def corona_curvature(a: Spinor, b: Spinor, alpha: int, beta: int) -> int:
    """Curvature of the major-corona disk with spinor ``alpha*a + beta*b``."""
    if gcd(alpha, beta) != 1:
        raise NotCoprimeError(f"gcd({alpha}, {beta}) != 1")
    a, b = Spinor.of(a), Spinor.of(b)
    return abs(cross(a, b)) + norm_sq(alpha * a + beta * b)


def to_params(q: Iterable[int]) -> ParamTuple:
    bs = sorted(q)
    b0, b1, b2, b3 = bs
    if b0 > 0:
        raise NotEvertedError(f"{tuple(bs)} has no outer (non-positive) curvature")
    twice_mu = b0 + b1 + b2 - b3
    if twice_mu % 2:
        raise NonIntegralMuError(f"{tuple(bs)} gives a half-integral mu; not a Descartes quadruple")
    return ParamTuple(-b0, b0 + b1, b0 + b2, abs(twice_mu) // 2)


def quintet_from_params(t: ParamTuple) -> Tuple[int, int, int, int, int]:
    B, k, n, mu = t
    return (-B, B + k, B + n, B + k + n - 2 * mu, B + k + n + 2 * mu)


def quadruples_from_params(t: ParamTuple) -> Tuple[DescartesQuadruple, DescartesQuadruple]:
    b0, b1, b2, b3, b4 = quintet_from_params(t)
    return DescartesQuadruple((b0, b1, b2, b3)), DescartesQuadruple((b0, b1, b2, b4))


def spinorial_identity_holds(a: Spinor, b: Spinor) -> bool:
    """Executable witness of ``(a x b)^2 + (a . b)^2 == |a|^2 |b|^2``.

    Also substitutes the resulting curvatures back into the everted form of
    the Descartes relation, so a ``True`` covers both statements.
    """
    a, b = Spinor.of(a), Spinor.of(b)
    c, d = cross(a, b), dot(a, b)
    lagrange = c * c + d * d == norm_sq(a) * norm_sq(b)
    b0, b1, b2, b3 = -abs(c), abs(c) + norm_sq(a), abs(c) + norm_sq(b), abs(c) + norm_sq(a + b)
    twice_mu = (b0 + b3) - (b0 + b1) - (b0 + b2)
    everted = 4 * b0 * b0 + twice_mu * twice_mu == 4 * (b0 + b1) * (b0 + b2)
    return lagrange and everted and is_descartes((b0, b1, b2, b3))


def reduce_to_root(q: Iterable[int], max_steps: int = 1_000_000) -> DescartesQuadruple:
    """Reflection descent: reflect the largest curvature while that strictly lowers it."""
    bs = sorted(q)
    for _ in range(max_steps):
        largest = bs[3]
        replaced = 2 * (bs[0] + bs[1] + bs[2]) - largest
        if replaced >= largest:
            return DescartesQuadruple(bs)
        bs = sorted(bs[:3] + [replaced])
    raise RuntimeError("reflection descent did not terminate")


def quadruple_gcd(q: Iterable[int]) -> int:
    g = 0
    for b in q:
        g = gcd(g, b)
    return g
