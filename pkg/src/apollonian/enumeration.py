"""Classification of maximal irreducible integral Apollonian packings.

:func:`solve_params` walks the Diophantine equation ``B^2 + mu^2 = k n``
directly; :func:`oracle_root_quadruples` reaches the same set by brute force
over tricycles followed by reflection descent, and shares no code path with it
beyond the kernels module.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from . import kernels
from .descartes import (
    DescartesQuadruple,
    ParamTuple,
    is_descartes,
    quadruple_gcd,
    quadruples_from_params,
    quintet_from_params,
    reduce_to_root,
)

CSV_COLUMNS = ("B", "k", "n", "mu", "B0", "B1", "B2", "B3", "B4")

# The Apollonian strip: the single packing class with B = 0.
STRIP_PARAMS = ParamTuple(0, 0, 1, 0)


@dataclass(frozen=True)
class ClassificationRow:
    params: ParamTuple
    quintet: Tuple[int, int, int, int, int]
    quad_main: DescartesQuadruple
    quad_conj: DescartesQuadruple

    @classmethod
    def from_params(cls, t: ParamTuple) -> "ClassificationRow":
        main, conj = quadruples_from_params(t)
        return cls(t, quintet_from_params(t), main, conj)

    def csv_row(self) -> list[int]:
        return list(self.params) + list(self.quintet)

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "quintet": list(self.quintet),
            "quad_main": list(self.quad_main),
            "quad_conj": list(self.quad_conj),
        }


def solve_params(B: int) -> List[ParamTuple]:
    """Every maximal irreducible ``(B, k, n, mu)``, ordered by ``(mu, k)``.

    ``B == 0`` yields the strip tuple ``(0, 0, 1, 0)`` only.
    """
    if B < 0:
        raise ValueError("B must be non-negative")
    if B == 0:
        return [STRIP_PARAMS]
    return [ParamTuple(B, k, n, mu) for k, n, mu in kernels.solve_params_raw(B)]


def enumerate_range(bmax: int) -> List[ClassificationRow]:
    if bmax < 1:
        raise ValueError("bmax must be at least 1")
    return [ClassificationRow.from_params(t) for B in range(1, bmax + 1) for t in solve_params(B)]


def counts_by_B(rows: Iterable[ClassificationRow]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for row in rows:
        counts[row.params.B] = counts.get(row.params.B, 0) + 1
    return counts


def default_search_bound(B: int) -> int:
    return max(4 * B * B, 4)


def oracle_root_quadruples(B: int, search_bound: Optional[int] = None) -> Set[DescartesQuadruple]:
    """Irreducible root quadruples with outer curvature ``-B``, found by exhaustive search.

    The default ``search_bound`` of ``4 B^2`` is a heuristic that is validated
    against :func:`solve_params`, not a proven bound.
    """
    if B < 1:
        raise ValueError("B must be positive")
    bound = default_search_bound(B) if search_bound is None else search_bound
    roots: Set[DescartesQuadruple] = set()
    seen: Set[Tuple[int, int, int]] = set()
    for b1, b2, d in kernels.oracle_completions(B, bound):
        key = tuple(sorted((b1, b2, d)))
        if key in seen:
            continue
        seen.add(key)
        q = (-B,) + key
        if sum(1 for b in q if b <= 0) > 1:
            continue
        root = reduce_to_root(q)
        if root[0] != -B or quadruple_gcd(root) != 1:
            continue
        roots.add(root)
    return roots


def mean_density(bmax: int, rows: Optional[Sequence[ClassificationRow]] = None) -> float:
    """Mean of ``count(B) / B`` over ``B = 1..bmax``."""
    counts = counts_by_B(rows if rows is not None else enumerate_range(bmax))
    return sum(counts.get(B, 0) / B for B in range(1, bmax + 1)) / bmax


def rows_to_csv(rows: Iterable[ClassificationRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in rows:
        w.writerow(row.csv_row())
    return buf.getvalue()


def rows_to_json(rows: Iterable[ClassificationRow]) -> str:
    return json.dumps([row.to_json() for row in rows], sort_keys=True, indent=1) + "\n"


def row_is_valid(row: ClassificationRow) -> bool:
    t = row.params
    return (
        t.is_solution()
        and t.is_maximal()
        and quadruple_gcd(t) == 1
        and quadruple_gcd(row.quintet[:4]) == 1
        and is_descartes(row.quad_main)
        and is_descartes(row.quad_conj)
        and tuple(row.quintet) == quintet_from_params(t)
    )
