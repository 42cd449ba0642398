"""Integral sublattices of Z^2: reduction, canonical bases, mosaics and similarity classes."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterator, List, Optional, Tuple

from .descartes import ParamTuple
from .errors import DegenerateLatticeError
from .spinor import ZERO, Spinor, cross, dot, norm_sq, sign_representative

LATTICE_CSV_COLUMNS = ("discriminant", "k", "n", "mu", "a_x", "a_y", "b_x", "b_y")


@dataclass(frozen=True)
class LatticeBasis:
    v: Spinor
    w: Spinor

    def __init__(self, v, w):
        object.__setattr__(self, "v", Spinor.of(v))
        object.__setattr__(self, "w", Spinor.of(w))

    @property
    def degenerate(self) -> bool:
        return cross(self.v, self.w) == 0

    @property
    def discriminant(self) -> int:
        return abs(cross(self.v, self.w))

    def gram(self) -> Tuple[int, int, int]:
        """``(|v|^2, |w|^2, v.w)``."""
        return norm_sq(self.v), norm_sq(self.w), dot(self.v, self.w)

    def is_principal(self) -> bool:
        k, n, mu = self.gram()
        return not self.degenerate and k <= n and 0 <= 2 * mu <= k

    def flat(self) -> Tuple[int, int, int, int]:
        return (self.v.x, self.v.y, self.w.x, self.w.y)

    def point(self, alpha: int, beta: int) -> Spinor:
        return alpha * self.v + beta * self.w


def discriminant(b: LatticeBasis) -> int:
    return b.discriminant


def _round_div(num: int, den: int) -> int:
    """Nearest integer to ``num / den`` (``den > 0``), ties toward +infinity."""
    return (2 * num + den) // (2 * den)


def _rank1_generator(v: Spinor, w: Spinor) -> Spinor:
    # v and w are collinear: run the Euclidean algorithm on their coefficients
    # along a primitive direction.
    if v == ZERO and w == ZERO:
        return ZERO
    ref = v if v != ZERO else w
    g = gcd(ref.x, ref.y)
    d = Spinor(ref.x // g, ref.y // g)

    def coeff(s: Spinor) -> int:
        return s.x // d.x if d.x else s.y // d.y

    return sign_representative(gcd(coeff(v), coeff(w)) * d)


def gauss_reduce(b: LatticeBasis, allow_degenerate: bool = False) -> LatticeBasis:
    """Lagrange-Gauss reduction.

    Returns ``(b1, b2)`` with ``|b1| <= |b2| <= |b2 + q b1|`` for every integer
    ``q``. Rank-1 input raises :class:`DegenerateLatticeError` unless
    ``allow_degenerate`` is set, in which case the result is ``(g, 0)`` with
    ``g`` a generator of the line lattice.
    """
    v, w = b.v, b.w
    if cross(v, w) == 0:
        if not allow_degenerate:
            raise DegenerateLatticeError(f"basis {b.flat()} is rank-deficient")
        return LatticeBasis(_rank1_generator(v, w), ZERO)
    if norm_sq(v) > norm_sq(w):
        v, w = w, v
    while True:
        q = _round_div(dot(v, w), norm_sq(v))
        w = w - q * v
        if norm_sq(w) < norm_sq(v):
            v, w = w, v
        else:
            return LatticeBasis(v, w)


def _variants(b: LatticeBasis) -> Iterator[LatticeBasis]:
    for p, q in ((b.v, b.w), (b.w, b.v)):
        for sp in (1, -1):
            for sq in (1, -1):
                yield LatticeBasis(sp * p, sq * q)


def canonicalize(b: LatticeBasis) -> LatticeBasis:
    """Deterministic representative of a reduced basis up to sign flips and swap.

    Among the eight variants ``(+-v, +-w)``, ``(+-w, +-v)`` that keep
    ``|first| <= |second|`` and a non-negative dot product, the one with the
    lexicographically largest flattened tuple wins.
    """
    best = None
    for c in _variants(b):
        k, n, mu = c.gram()
        if k <= n and mu >= 0 and (best is None or c.flat() > best.flat()):
            best = c
    if best is None:
        raise ValueError(f"basis {b.flat()} is not reduced")
    return best


def principal_basis(b: LatticeBasis) -> LatticeBasis:
    return canonicalize(gauss_reduce(b))


def similarity_key(b: LatticeBasis) -> Tuple[int, int, int]:
    """``(k, n, mu)`` of the principal basis divided by their gcd."""
    k, n, mu = principal_basis(b).gram()
    g = gcd(gcd(k, n), mu)
    return (k // g, n // g, mu // g)


def mosaic_points(b: LatticeBasis, max_norm_sq: int) -> List[Tuple[Spinor, int, int]]:
    """Coprime combinations ``alpha v + beta w`` with norm at most ``max_norm_sq``.

    One entry per ``+-`` pair, represented by the point whose first nonzero
    coordinate is positive; sorted by ``(norm, x, y)``.
    """
    c = cross(b.v, b.w)
    if c == 0:
        raise DegenerateLatticeError(f"basis {b.flat()} is rank-deficient")
    if max_norm_sq <= 0:
        return []
    # Cramer: alpha = cross(p, w) / c, so alpha^2 <= |p|^2 |w|^2 / c^2.
    amax = isqrt(max_norm_sq * norm_sq(b.w) // (c * c)) + 1
    bmax = isqrt(max_norm_sq * norm_sq(b.v) // (c * c)) + 1
    found: dict[Spinor, Tuple[int, int]] = {}
    for alpha in range(-amax, amax + 1):
        for beta in range(-bmax, bmax + 1):
            if gcd(alpha, beta) != 1:
                continue
            p = b.point(alpha, beta)
            if norm_sq(p) > max_norm_sq:
                continue
            rep = sign_representative(p)
            if rep not in found:
                found[rep] = (alpha, beta) if rep == p else (-alpha, -beta)
    pts = [(p, a, bb) for p, (a, bb) in found.items()]
    pts.sort(key=lambda t: (norm_sq(t[0]), t[0].x, t[0].y))
    return pts


def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """``(g, s, t)`` with ``s a + t b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _vectors_with_cross(a: Spinor, d: int, max_norm_sq: int) -> Iterator[Spinor]:
    """All integer ``b`` with ``cross(a, b) == d`` and ``|b|^2 <= max_norm_sq``."""
    # a.x * b.y - a.y * b.x == d; step along a / g.
    g, s, t = _ext_gcd(a.x, -a.y)
    if d % g:
        return
    m = d // g
    p0 = Spinor(t * m, s * m)  # (b.x, b.y) particular solution
    step = Spinor(a.x // g, a.y // g)
    # Project the particular solution onto the step direction to centre the search.
    ns = norm_sq(step)
    t_mid = -_round_div(dot(p0, step), ns)
    radius = isqrt(max_norm_sq // ns) + 2
    for j in range(t_mid - radius, t_mid + radius + 1):
        cand = p0 + j * step
        if norm_sq(cand) <= max_norm_sq:
            yield cand


def lattices_of_discriminant(d: int) -> List[LatticeBasis]:
    """One canonical principal basis per similarity class of irreducible lattices of discriminant ``d``.

    Exhaustive over bases: principal bases satisfy ``k <= n`` and
    ``k n = d^2 + mu^2 <= 4 d^2 / 3``, which bounds both vectors.
    """
    if d < 1:
        raise ValueError("discriminant must be positive")
    kmax = isqrt(4 * d * d // 3)  # k^2 <= k n <= 4 d^2 / 3
    nmax = 4 * d * d // 3
    found: dict[Tuple[int, int, int], LatticeBasis] = {}
    r = isqrt(kmax)
    for ax in range(0, r + 1):
        for ay in range(-r, r + 1):
            a = Spinor(ax, ay)
            k = norm_sq(a)
            if k == 0 or k > kmax or sign_representative(a) != a:
                continue
            for b in _vectors_with_cross(a, d, nmax):
                n, mu = norm_sq(b), dot(a, b)
                if not (k <= n and 0 <= 2 * mu <= k):
                    continue
                if gcd(gcd(d, k), gcd(n, mu)) != 1:
                    continue
                key = (k, n, mu)
                cand = canonicalize(LatticeBasis(a, b))
                if key not in found or cand.flat() > found[key].flat():
                    found[key] = cand
    return [found[key] for key in sorted(found, key=lambda t: (t[2], t[0]))]


def spinors_for_params(t: ParamTuple) -> Optional[Tuple[Spinor, Spinor]]:
    """Integer spinors ``(a, b)`` with ``|a|^2 = k``, ``|b|^2 = n``, ``a.b = mu``, ``|a x b| = B``.

    The pair returned is canonical (lexicographically largest flattened
    tuple); None when no such pair exists.
    """
    B, k, n, mu = t
    best = None
    for a in _two_squares(k):
        for b in _two_squares(n):
            if dot(a, b) == mu and abs(cross(a, b)) == B:
                cand = (a.x, a.y, b.x, b.y)
                if best is None or cand > best:
                    best = cand
    if best is None:
        return None
    return Spinor(best[0], best[1]), Spinor(best[2], best[3])


def _two_squares(m: int) -> List[Spinor]:
    """Every integer vector of squared norm ``m``."""
    out = []
    r = isqrt(m)
    for x in range(-r, r + 1):
        y2 = m - x * x
        y = isqrt(y2)
        if y * y == y2:
            out.append(Spinor(x, y))
            if y:
                out.append(Spinor(x, -y))
    return out


def lattices_to_csv(bases: List[LatticeBasis]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(LATTICE_CSV_COLUMNS)
    for b in bases:
        k, n, mu = b.gram()
        w.writerow([b.discriminant, k, n, mu, *b.flat()])
    return buf.getvalue()
