"""Integral tangency spinors: exact 2-vectors with dot and symplectic products.

Components are Python ints, so no operation here can overflow or round.
A spinor carries no sign normalisation; ``s`` and ``-s`` are distinct values
and callers that need a sign class pick their own representative.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True, slots=True)
class Spinor:
    x: int
    y: int

    @classmethod
    def of(cls, v: "Spinor | Sequence[int]") -> "Spinor":
        if isinstance(v, Spinor):
            return v
        x, y = v
        return cls(int(x), int(y))

    def __iter__(self) -> Iterator[int]:
        yield self.x
        yield self.y

    def __add__(self, other: "Spinor") -> "Spinor":
        return Spinor(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Spinor") -> "Spinor":
        return Spinor(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Spinor":
        return Spinor(-self.x, -self.y)

    def __rmul__(self, k: int) -> "Spinor":
        return Spinor(k * self.x, k * self.y)

    def to_json(self) -> list[int]:
        return [self.x, self.y]

    def __repr__(self) -> str:
        return f"Spinor({self.x}, {self.y})"


ZERO = Spinor(0, 0)


def dot(a: Spinor, b: Spinor) -> int:
    return a.x * b.x + a.y * b.y


def cross(a: Spinor, b: Spinor) -> int:
    """Symplectic product ``det[a b] = x*y' - x'*y``."""
    return a.x * b.y - b.x * a.y


def symp_conj(a: Spinor) -> Spinor:
    """Quarter turn ``[x, y] -> [-y, x]``; ``symp_conj(symp_conj(a)) == -a``."""
    return Spinor(-a.y, a.x)


def add(a: Spinor, b: Spinor) -> Spinor:
    return a + b


def sub(a: Spinor, b: Spinor) -> Spinor:
    return a - b


def neg(a: Spinor) -> Spinor:
    return -a


def norm_sq(a: Spinor) -> int:
    return a.x * a.x + a.y * a.y


def sign_representative(a: Spinor) -> Spinor:
    """Member of ``{a, -a}`` whose first nonzero coordinate is positive."""
    if a.x < 0 or (a.x == 0 and a.y < 0):
        return -a
    return a
