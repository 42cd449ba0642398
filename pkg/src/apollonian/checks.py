"""Self-check suites run by ``apollonian check``.

Each suite returns a :class:`CheckResult`. Failures of ``error``-tier suites
make the command exit with status 4; ``warning``-tier results are reported
only.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, List, Sequence

from . import enumeration, geometry, lattice, minkowski
from .descartes import corona_curvature
from .enumeration import ClassificationRow

log = logging.getLogger(__name__)

DENSITY_BAND = (0.25, 0.42)
DENSITY_BMAX = 200
ORACLE_BMAX = 60  # the brute-force oracle is quartic in B
PACKING_BMAX = 6
PACKING_FACTOR = 4


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    tier: str = "error"

    def line(self) -> str:
        status = "ok" if self.passed else ("WARN" if self.tier == "warning" else "FAIL")
        return f"[{status}] {self.name}: {self.detail}"


def check_table(rows: Sequence[ClassificationRow], bmax: int) -> CheckResult:
    bad = [r.params for r in rows if not enumeration.row_is_valid(r)]
    detail = f"{len(rows)} rows for B <= {bmax}"
    if bad:
        detail += f"; invalid rows {bad[:3]}"
    return CheckResult("table", not bad, detail)


def check_oracle(rows: Sequence[ClassificationRow], bmax: int) -> CheckResult:
    top = min(bmax, ORACLE_BMAX)
    by_b: dict[int, set] = {}
    for r in rows:
        by_b.setdefault(r.params.B, set()).add(r.quad_main)
    mismatched = [B for B in range(1, top + 1) if by_b.get(B, set()) != enumeration.oracle_root_quadruples(B)]
    detail = f"brute-force roots agree for B <= {top}" if not mismatched else f"mismatch at B = {mismatched[:5]}"
    return CheckResult("oracle", not mismatched, detail)


def check_coincidence(rows: Sequence[ClassificationRow], bmax: int) -> CheckResult:
    bad = [r.params for r in rows if not minkowski.coincidence_check(r.params)]
    return CheckResult("coincidence", not bad, f"{len(rows) - len(bad)}/{len(rows)} tuples" + (f"; failing {bad[:3]}" if bad else ""))


def check_hermitian(rows: Sequence[ClassificationRow], bmax: int) -> CheckResult:
    bad = []
    for r in rows:
        t = r.params
        h_par = minkowski.hermitian_from_params(t)
        h_curv = minkowski.hermitian_from_curvatures(r.quad_main)
        pair = lattice.spinors_for_params(t)
        ok = h_par.determinant() == 0 and h_curv.determinant() == 0 and pair is not None
        if ok:
            h_spin = minkowski.hermitian_from_spinors(*pair)
            ok = h_spin.determinant() == 0 and h_curv.agrees_with(h_spin)
        if not ok:
            bad.append(t)
    return CheckResult("hermitian", not bad, f"{len(rows) - len(bad)}/{len(rows)} rows" + (f"; failing {bad[:3]}" if bad else ""))


def check_packings(rows: Sequence[ClassificationRow], bmax: int) -> CheckResult:
    """Exact tangency audit plus corona/mosaic agreement on small packings."""
    problems = []
    count = 0
    for r in rows:
        if r.params.B > PACKING_BMAX:
            break
        bound = PACKING_FACTOR * max(r.quad_main)
        p = geometry.build_packing(r.quad_main, bound)
        count += 1
        if geometry.audit_tangencies(p):
            problems.append(f"tangency {tuple(r.quad_main)}")
            continue
        a, b = lattice.spinors_for_params(r.params)
        base = lattice.LatticeBasis(a, b)
        mosaic = sorted(corona_curvature(a, b, al, be) for _, al, be in lattice.mosaic_points(base, bound - r.params.B))
        corona = sorted(p.disks[i].beta for i in p.corona(0))
        if mosaic != corona:
            problems.append(f"corona {tuple(r.quad_main)}")
    detail = f"{count} packings audited" + (f"; {problems[:3]}" if problems else "")
    return CheckResult("packings", not problems, detail)


def check_density(rows: Sequence[ClassificationRow], bmax: int) -> CheckResult:
    top = max(bmax, DENSITY_BMAX)
    use = rows if top == bmax else enumeration.enumerate_range(top)
    m = enumeration.mean_density(top, use)
    lo, hi = DENSITY_BAND
    return CheckResult("density", lo <= m <= hi, f"mean count(B)/B over B <= {top} is {m:.4f} (band [{lo}, {hi}])", "warning")


SUITES: List[Callable[[Sequence[ClassificationRow], int], CheckResult]] = [
    check_table,
    check_oracle,
    check_coincidence,
    check_hermitian,
    check_packings,
    check_density,
]


def run_all(bmax: int) -> List[CheckResult]:
    if bmax < 1:
        raise ValueError("bmax must be at least 1")
    rows = enumeration.enumerate_range(bmax)
    results = []
    for suite in SUITES:
        try:
            res = suite(rows, bmax)
        except Exception as exc:  # a crashing suite is a failed invariant, not a crash of the run
            res = CheckResult(suite.__name__.removeprefix("check_"), False, f"raised {type(exc).__name__}: {exc}")
        log.info(res.line())
        results.append(res)
    return results


def all_passed(results: Sequence[CheckResult]) -> bool:
    return all(r.passed for r in results if r.tier == "error")
