"""Exact placement of integral Apollonian packings.

Disks are stored as symbols ``(xdot, ydot) / beta``: curvature ``beta`` and
curvature-weighted centre ``(xdot, ydot) = beta * centre``. Lines (``beta ==
0``) keep their unit normal in ``(xdot, ydot)`` plus an ``offset``, so that the
same reflection ``D' = 2(A + B + C) - D`` applies to all three components of
every disk in a Descartes configuration.
"""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .descartes import DescartesQuadruple, is_descartes, reduce_to_root, to_params
from .errors import (
    ApollonianError,
    InvalidQuadrupleError,
    InvalidSpinorError,
    InvalidTricycleError,
    NotEvertedError,
    NotTangentError,
)
from .gaussian import gaussian_isqrt
from .lattice import spinors_for_params
from .spinor import Spinor


@dataclass(frozen=True)
class DiskSymbol:
    beta: int
    xdot: Fraction
    ydot: Fraction
    offset: Optional[Fraction] = None  # lines only: {p : normal . p == offset}

    def __init__(self, beta, xdot, ydot, offset=None):
        object.__setattr__(self, "beta", int(beta))
        object.__setattr__(self, "xdot", Fraction(xdot))
        object.__setattr__(self, "ydot", Fraction(ydot))
        object.__setattr__(self, "offset", None if offset is None else Fraction(offset))
        if self.beta == 0 and self.offset is None:
            raise ValueError("a line needs an offset")

    @classmethod
    def line(cls, nx, ny, offset) -> "DiskSymbol":
        return cls(0, nx, ny, offset)

    @property
    def is_line(self) -> bool:
        return self.beta == 0

    @property
    def center(self) -> Tuple[Fraction, Fraction]:
        if self.is_line:
            raise ValueError("a line has no centre")
        return self.xdot / self.beta, self.ydot / self.beta

    @property
    def radius(self) -> Fraction:
        """Signed radius; negative for the outer disk."""
        if self.is_line:
            raise ValueError("a line has no radius")
        return Fraction(1, self.beta)

    def key(self) -> tuple:
        return (self.beta, self.xdot, self.ydot, self.offset)

    def to_json(self) -> dict:
        d = {"beta": self.beta, "xdot": _frac_str(self.xdot), "ydot": _frac_str(self.ydot)}
        if self.is_line:
            d["offset"] = _frac_str(self.offset)
        return d


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def reflect(a: DiskSymbol, b: DiskSymbol, c: DiskSymbol, d: DiskSymbol) -> DiskSymbol:
    """The disk replacing ``d`` in the Descartes configuration ``(a, b, c, d)``."""
    beta = 2 * (a.beta + b.beta + c.beta) - d.beta
    if beta == 0:
        raise ApollonianError("reflection produced a line; not supported")
    return DiskSymbol(
        beta,
        2 * (a.xdot + b.xdot + c.xdot) - d.xdot,
        2 * (a.ydot + b.ydot + c.ydot) - d.ydot,
    )


def are_tangent(d1: DiskSymbol, d2: DiskSymbol) -> bool:
    """Exact tangency test (signed radii cover internal tangency to the outer disk)."""
    if d1.is_line and d2.is_line:
        return d1.xdot == -d2.xdot and d1.ydot == -d2.ydot
    if d1.is_line or d2.is_line:
        ln, dk = (d1, d2) if d1.is_line else (d2, d1)
        cx, cy = dk.center
        gap = ln.xdot * cx + ln.ydot * cy - ln.offset
        return gap * gap == dk.radius ** 2
    (x1, y1), (x2, y2) = d1.center, d2.center
    return (x1 - x2) ** 2 + (y1 - y2) ** 2 == (d1.radius + d2.radius) ** 2


def place_corona_disk(B: int, s: Spinor) -> DiskSymbol:
    """Disk tangent to the outer circle of curvature ``-B`` centred at the origin.

    With ``s = [m, n]`` the disk has curvature ``B + m^2 + n^2`` and symbol
    ``((m^2 - n^2)/B, 2mn/B)``.
    """
    s = Spinor.of(s)
    if B < 1:
        raise ValueError("B must be positive")
    if s.x == 0 and s.y == 0:
        raise InvalidSpinorError("the zero spinor does not define a corona disk")
    m, n = s.x, s.y
    return DiskSymbol(B + m * m + n * n, Fraction(m * m - n * n, B), Fraction(2 * m * n, B))


@dataclass(frozen=True)
class RealSpinor:
    x: float
    y: float

    def dot(self, o: "RealSpinor") -> float:
        return self.x * o.x + self.y * o.y

    def cross(self, o: "RealSpinor") -> float:
        return self.x * o.y - o.x * self.y

    def norm_sq(self) -> float:
        return self.x * self.x + self.y * self.y


REAL_SPINOR_RTOL = 1e-12


def spinors_from_curvatures(b0: int, b1: int, b2: int) -> Tuple[RealSpinor, RealSpinor]:
    """A spinor pair out of the outer disk ``b0`` reproducing the tricycle ``(b0, b1, b2)``.

    ``|b|^2 = b0 + b1``, ``|a|^2 = b0 + b2``, ``a x b = b0`` and ``a . b`` is
    the curvature of the circle through the three tangency points.
    """
    if b0 > 0:
        raise InvalidTricycleError("the first curvature must be the outer (non-positive) one")
    s = b0 + b1
    if s <= 0:
        raise InvalidTricycleError("b0 + b1 must be positive")
    radicand = b0 * b1 + b1 * b2 + b2 * b0
    if radicand < 0:
        raise InvalidTricycleError(f"radicand {radicand} < 0")
    root = math.sqrt(s)
    a = RealSpinor(b0 / root, math.sqrt(radicand) / root)
    b = RealSpinor(0.0, s / root)
    return a, b


def triangle_from_disks(d1: DiskSymbol, d2: DiskSymbol) -> Tuple[Fraction, Fraction, int]:
    """Right triangle ``(a, b, c)`` of two tangent disks; ``a + b i`` is the squared tangency spinor."""
    a = d1.beta * d2.xdot - d2.beta * d1.xdot
    b = d1.beta * d2.ydot - d2.beta * d1.ydot
    c = d1.beta + d2.beta
    if a * a + b * b != c * c or not are_tangent(d1, d2):
        raise NotTangentError("disks are not tangent")
    return a, b, c


def euclid_params_to_triple(s: Spinor) -> Tuple[int, int, int]:
    m, n = Spinor.of(s)
    return (m * m - n * n, 2 * m * n, m * m + n * n)


def tangency_spinor(d1: DiskSymbol, d2: DiskSymbol) -> Optional[Spinor]:
    """Integral spinor of the ordered tangent pair, or None if its square is not a Gaussian integer square."""
    a, b, _ = triangle_from_disks(d1, d2)
    if a.denominator != 1 or b.denominator != 1:
        return None
    root = gaussian_isqrt(int(a), int(b))
    return None if root is None else Spinor(*root)


@dataclass
class Packing:
    root: DescartesQuadruple
    max_curvature: int
    disks: List[DiskSymbol] = field(default_factory=list)
    depth: List[int] = field(default_factory=list)
    tangencies: List[Tuple[int, int]] = field(default_factory=list)
    # Index quadruples of every Descartes configuration visited.
    cells: List[Tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def is_strip(self) -> bool:
        return self.root[0] == 0

    def curvatures(self) -> List[int]:
        return [d.beta for d in self.disks]

    def corona(self, index: int = 0) -> List[int]:
        """Indices of the disks recorded as tangent to disk ``index``."""
        out = []
        for i, j in self.tangencies:
            if i == index:
                out.append(j)
            elif j == index:
                out.append(i)
        return sorted(set(out))

    def to_json(self) -> str:
        data = {
            "root": list(self.root),
            "max_curvature": self.max_curvature,
            "disks": [dict(d.to_json(), depth=g) for d, g in zip(self.disks, self.depth)],
        }
        return json.dumps(data, sort_keys=True, indent=1) + "\n"


def _place_everted_root(root: DescartesQuadruple) -> List[DiskSymbol]:
    t = to_params(root)
    pair = spinors_for_params(t)
    if pair is None:
        raise ApollonianError(f"no integral spinor pair realises {tuple(root)}")
    a, b = pair
    b = -b  # a . b = -mu, so |a + b|^2 = k + n - 2 mu gives the fourth curvature
    B = t.B
    return [DiskSymbol(-B, 0, 0), place_corona_disk(B, a), place_corona_disk(B, b), place_corona_disk(B, a + b)]


def _place_strip_root(root: DescartesQuadruple) -> List[DiskSymbol]:
    c = root[2]
    if root != (0, 0, c, c) or c < 1:
        raise ApollonianError(f"unsupported strip configuration {tuple(root)}")
    h = Fraction(1, c)
    # Lines x = +-1/c; unit normals point away from the strip.
    return [DiskSymbol.line(1, 0, h), DiskSymbol.line(-1, 0, h), DiskSymbol(c, 0, 0), DiskSymbol(c, 0, 2)]


def build_packing(q: Sequence[int], max_curvature: int) -> Packing:
    """Every disk of curvature at most ``max_curvature`` in the packing generated by ``q``.

    ``q`` is first reduced to its root quadruple, which is placed exactly from
    its principal spinors (outer circle centred at the origin). Breadth-first
    reflection then adds each disk once. Strip packings are truncated to one
    period: disks centred with ``0 <= y <= 2/c``.
    """
    q = DescartesQuadruple(q)
    if not is_descartes(q):
        raise InvalidQuadrupleError(f"{tuple(q)} does not satisfy the Descartes relation")
    if q[0] > 0:
        raise NotEvertedError(f"{tuple(q)} has no outer disk or line")
    root = reduce_to_root(q)
    if max_curvature < root[3]:
        raise ValueError(f"max_curvature must be at least {root[3]}")
    seeds = _place_strip_root(root) if root[0] == 0 else _place_everted_root(root)
    ymax = Fraction(2, root[2]) if root[0] == 0 else None

    p = Packing(root=root, max_curvature=max_curvature)
    index: Dict[tuple, int] = {}
    for d in seeds:
        index[d.key()] = len(p.disks)
        p.disks.append(d)
        p.depth.append(0)
    p.tangencies.extend((i, j) for i in range(4) for j in range(i + 1, 4))
    p.cells.append((0, 1, 2, 3))

    queue = deque([((0, 1, 2, 3), -1)])
    while queue:
        cell, last = queue.popleft()
        for pos in range(4):
            if pos == last:
                continue
            others = [cell[j] for j in range(4) if j != pos]
            new = reflect(*(p.disks[j] for j in others), p.disks[cell[pos]])
            if new.beta > max_curvature:
                continue
            if ymax is not None and not 0 <= new.ydot / new.beta <= ymax:
                continue
            key = new.key()
            if key in index:
                continue
            idx = index[key] = len(p.disks)
            p.disks.append(new)
            p.depth.append(p.depth[cell[pos]] + 1 if last >= 0 else 1)
            p.tangencies.extend((j, idx) for j in others)
            child = tuple(idx if j == pos else cell[j] for j in range(4))
            p.cells.append(child)
            queue.append((child, pos))
    return p


def audit_tangencies(p: Packing) -> List[Tuple[int, int]]:
    """Recorded tangent pairs that fail the exact tangency equation (empty when sound)."""
    return [(i, j) for i, j in p.tangencies if not are_tangent(p.disks[i], p.disks[j])]
