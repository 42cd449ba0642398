import csv
import io
import json
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from apollonian.descartes import ParamTuple, is_descartes
from apollonian.enumeration import (
    CSV_COLUMNS,
    STRIP_PARAMS,
    ClassificationRow,
    counts_by_B,
    enumerate_range,
    mean_density,
    oracle_root_quadruples,
    row_is_valid,
    rows_to_csv,
    rows_to_json,
    solve_params,
)
from apollonian.lattice import spinors_for_params


def brute_params(B):
    """Independent scan of the defining conditions over a box."""
    out = []
    for mu in range(0, B + 1):
        if 3 * mu * mu > B * B:
            break
        N = B * B + mu * mu
        for k in range(1, N + 1):
            if N % k:
                continue
            n = N // k
            if 2 * mu <= k <= n and gcd(gcd(B, k), gcd(n, mu)) == 1:
                out.append((k, n, mu))
    return sorted(out, key=lambda t: (t[2], t[0]))


def test_solve_params_examples():
    assert solve_params(6) == [ParamTuple(6, 1, 36, 0), ParamTuple(6, 4, 9, 0), ParamTuple(6, 5, 8, 2)]
    assert solve_params(1) == [ParamTuple(1, 1, 1, 0)]
    assert solve_params(0) == [STRIP_PARAMS]
    with pytest.raises(ValueError):
        solve_params(-1)


@pytest.mark.parametrize("B", range(1, 41))
def test_solve_params_matches_brute_scan(B):
    assert [(t.k, t.n, t.mu) for t in solve_params(B)] == brute_params(B)


def test_enumerate_range_examples():
    rows = enumerate_range(9)
    counts = counts_by_B(rows)
    assert [counts[B] for B in range(1, 10)] == [1, 1, 2, 2, 2, 3, 3, 3, 4]
    assert [r.quintet for r in enumerate_range(2)] == [(-1, 2, 2, 3, 3), (-2, 3, 6, 7, 7)]
    with pytest.raises(ValueError):
        enumerate_range(0)


def test_count_for_B10_matches_oracle():
    assert counts_by_B(enumerate_range(10))[10] == len(oracle_root_quadruples(10)) == 3


def test_oracle_examples():
    assert oracle_root_quadruples(6) == {(-6, 7, 42, 43), (-6, 10, 15, 19), (-6, 11, 14, 15)}
    assert oracle_root_quadruples(1) == {(-1, 2, 2, 3)}
    assert oracle_root_quadruples(3) == {(-3, 4, 12, 13), (-3, 5, 8, 8)}


@pytest.mark.parametrize("B", range(1, 16))
def test_oracle_equivalence(B):
    assert {r.quad_main for r in map(ClassificationRow.from_params, solve_params(B))} == oracle_root_quadruples(B)


def test_rows_valid_and_k_n_sums_of_two_squares():
    for row in enumerate_range(60):
        assert row_is_valid(row)
        assert is_descartes(row.quad_main) and is_descartes(row.quad_conj)
        a, b = spinors_for_params(row.params)
        assert (a.x ** 2 + a.y ** 2, b.x ** 2 + b.y ** 2) == (row.params.k, row.params.n)


def test_row_is_valid_rejects_corruption():
    good = ClassificationRow.from_params(ParamTuple(6, 5, 8, 2))
    bad = ClassificationRow(ParamTuple(6, 5, 8, 3), good.quintet, good.quad_main, good.quad_conj)
    assert row_is_valid(good) and not row_is_valid(bad)
    reducible = ClassificationRow.from_params(ParamTuple(2, 2, 2, 0))
    assert not row_is_valid(reducible)


def test_mean_density_band():
    m = mean_density(200)
    assert 0.25 <= m <= 0.42
    assert round(m, 4) == 0.3076


def test_csv_and_json_formats():
    rows = enumerate_range(3)
    text = rows_to_csv(rows)
    assert text.splitlines()[0] == ",".join(CSV_COLUMNS)
    parsed = list(csv.reader(io.StringIO(text)))
    assert parsed[1] == ["1", "1", "1", "0", "-1", "2", "2", "3", "3"]
    assert "\r" not in text
    data = json.loads(rows_to_json(rows))
    assert data[0] == {"params": {"B": 1, "k": 1, "n": 1, "mu": 0}, "quintet": [-1, 2, 2, 3, 3],
                       "quad_conj": [-1, 2, 2, 3], "quad_main": [-1, 2, 2, 3]}


@given(st.integers(1, 400))
def test_solve_params_invariants(B):
    ts = solve_params(B)
    assert ts == sorted(ts, key=lambda t: (t.mu, t.k))
    for t in ts:
        assert t.is_solution() and t.is_maximal()
        assert gcd(gcd(t.B, t.k), gcd(t.n, t.mu)) == 1
