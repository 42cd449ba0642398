import csv
import io
from math import gcd, isqrt

import pytest
from hypothesis import assume, given

from apollonian.descartes import ParamTuple, corona_curvature
from apollonian.enumeration import solve_params
from apollonian.errors import DegenerateLatticeError
from apollonian.lattice import (
    LATTICE_CSV_COLUMNS,
    LatticeBasis,
    canonicalize,
    discriminant,
    gauss_reduce,
    lattices_of_discriminant,
    lattices_to_csv,
    mosaic_points,
    principal_basis,
    similarity_key,
    spinors_for_params,
)
from apollonian.spinor import Spinor, cross, dot, norm_sq, sign_representative, symp_conj

from strategies import nondegenerate_pairs


def in_lattice(p, b):
    c = cross(b.v, b.w)
    return cross(p, b.w) % c == 0 and cross(b.v, p) % c == 0


def lattice_points(b, radius_sq):
    """All points of the lattice inside a disk, by scanning the integer grid."""
    r = isqrt(radius_sq)
    return [Spinor(x, y) for x in range(-r, r + 1) for y in range(-r, r + 1)
            if 0 < x * x + y * y <= radius_sq and in_lattice(Spinor(x, y), b)]


def test_discriminant_examples():
    assert discriminant(LatticeBasis([1, -2], [2, 2])) == 6
    assert discriminant(LatticeBasis([1, 0], [0, 1])) == 1
    b = LatticeBasis([1, 0], [2, 0])
    assert discriminant(b) == 0 and b.degenerate


def test_gauss_reduce_examples():
    r = gauss_reduce(LatticeBasis([5, 2], [7, 4]))
    assert {sign_representative(r.v), sign_representative(r.w)} == {Spinor(1, -2), Spinor(2, 2)}
    assert gauss_reduce(LatticeBasis([1, 0], [0, 1])) == LatticeBasis([1, 0], [0, 1])
    r = gauss_reduce(LatticeBasis([1, 0], [100, 1]))
    assert {sign_representative(r.v), sign_representative(r.w)} == {Spinor(1, 0), Spinor(0, 1)}


def test_gauss_reduce_degenerate():
    with pytest.raises(DegenerateLatticeError):
        gauss_reduce(LatticeBasis([1, 0], [2, 0]))
    assert gauss_reduce(LatticeBasis([2, 4], [3, 6]), allow_degenerate=True) == LatticeBasis([1, 2], [0, 0])
    assert gauss_reduce(LatticeBasis([0, 0], [0, -3]), allow_degenerate=True) == LatticeBasis([0, 3], [0, 0])


def test_canonicalize_examples():
    c = canonicalize(LatticeBasis([-1, 2], [2, 2]))
    assert c == LatticeBasis([1, -2], [-2, -2])
    assert canonicalize(LatticeBasis([1, 0], [0, 1])) == LatticeBasis([1, 0], [0, 1])
    assert canonicalize(LatticeBasis([2, 2], [1, -2])) == canonicalize(LatticeBasis([1, -2], [2, 2]))
    assert principal_basis(LatticeBasis([5, 2], [7, 4])) == c


def test_similarity_key_examples():
    assert similarity_key(LatticeBasis([1, -2], [2, 2])) == (5, 8, 2)
    assert similarity_key(LatticeBasis([1, 0], [0, 1])) == similarity_key(LatticeBasis([2, 0], [0, 2])) == (1, 1, 0)
    assert similarity_key(LatticeBasis([1, 0], [0, 2])) != similarity_key(LatticeBasis([1, 0], [0, 3]))
    with pytest.raises(DegenerateLatticeError):
        similarity_key(LatticeBasis([1, 1], [2, 2]))


def test_mosaic_examples():
    pts = mosaic_points(LatticeBasis([1, 0], [0, 1]), 4)
    assert [p for p, _, _ in pts] == [Spinor(0, 1), Spinor(1, 0), Spinor(1, -1), Spinor(1, 1)]
    b = LatticeBasis([1, -2], [2, 2])
    pts = mosaic_points(b, 17)
    assert {p for p, _, _ in pts} == {Spinor(1, -2), Spinor(2, 2), Spinor(3, 0), Spinor(1, 4)}
    assert sorted(corona_curvature(b.v, b.w, al, be) for _, al, be in pts) == [11, 14, 15, 23]
    assert all(b.point(al, be) == p for p, al, be in pts)
    assert mosaic_points(b, 0) == []
    with pytest.raises(DegenerateLatticeError):
        mosaic_points(LatticeBasis([1, 0], [2, 0]), 10)


def test_lattices_of_discriminant_examples():
    keys = [b.gram() for b in lattices_of_discriminant(6)]
    assert keys == [(1, 36, 0), (4, 9, 0), (5, 8, 2)]
    assert [b.gram() for b in lattices_of_discriminant(1)] == [(1, 1, 0)]
    assert [len(lattices_of_discriminant(d)) for d in range(1, 10)] == [1, 1, 2, 2, 2, 3, 3, 3, 4]
    with pytest.raises(ValueError):
        lattices_of_discriminant(0)


@pytest.mark.parametrize("d", range(1, 41))
def test_lattice_classes_match_classification(d):
    found = lattices_of_discriminant(d)
    assert [(b.discriminant, *b.gram()) for b in found] == [(t.B, t.k, t.n, t.mu) for t in solve_params(d)]
    assert all(b == canonicalize(b) and b.is_principal() for b in found)
    assert len({similarity_key(b) for b in found}) == len(found)


def test_spinors_for_params():
    a, b = spinors_for_params(ParamTuple(6, 5, 8, 2))
    assert (norm_sq(a), norm_sq(b), dot(a, b), abs(cross(a, b))) == (5, 8, 2, 6)
    assert spinors_for_params(ParamTuple(1, 3, 1, 0)) is None


def test_lattice_csv():
    text = lattices_to_csv(lattices_of_discriminant(6))
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == LATTICE_CSV_COLUMNS
    # Lexicographically largest basis over the whole class: a = [2,-1], b = [2,2].
    assert rows[3] == ["6", "5", "8", "2", "2", "-1", "2", "2"]


@given(nondegenerate_pairs(12))
def test_reduction_is_unimodular_and_shortest(pair):
    b = LatticeBasis(*pair)
    r = gauss_reduce(b)
    # Same lattice: each basis lies in the other's lattice and the areas agree.
    assert r.discriminant == b.discriminant
    assert all(in_lattice(p, b) for p in (r.v, r.w)) and all(in_lattice(p, r) for p in (b.v, b.w))
    k, n, _ = r.gram()
    pts = lattice_points(b, 2 * max(k, n))
    shortest = min(norm_sq(p) for p in pts)
    second = min(norm_sq(p) for p in pts if cross(p, r.v) != 0)
    assert (k, n) == (shortest, second)


@given(nondegenerate_pairs(40))
def test_principal_constraints(pair):
    p = principal_basis(LatticeBasis(*pair))
    k, n, mu = p.gram()
    c = cross(p.v, p.w)
    assert 0 <= 2 * mu <= k <= n
    assert 3 * mu * mu <= c * c
    assert p.is_principal()


@given(nondegenerate_pairs(30))
def test_canonical_form_is_orbit_invariant(pair):
    r = gauss_reduce(LatticeBasis(*pair))
    c = canonicalize(r)
    for v, w in ((r.v, r.w), (r.w, r.v)):
        for sv in (1, -1):
            for sw in (1, -1):
                alt = LatticeBasis(sv * v, sw * w)
                if norm_sq(alt.v) <= norm_sq(alt.w):
                    assert canonicalize(alt) == c


@given(nondegenerate_pairs(20))
def test_similarity_key_invariances(pair):
    b = LatticeBasis(*pair)
    key = similarity_key(b)
    assert similarity_key(LatticeBasis(3 * b.v, 3 * b.w)) == key
    assert similarity_key(LatticeBasis(symp_conj(b.v), symp_conj(b.w))) == key
    assert similarity_key(LatticeBasis(Spinor(b.v.x, -b.v.y), Spinor(b.w.x, -b.w.y))) == key
    assert similarity_key(LatticeBasis(b.w, b.v + 2 * b.w)) == key
    assert gcd(gcd(key[0], key[1]), key[2]) == 1


@given(nondegenerate_pairs(8))
def test_mosaic_is_basis_independent(pair):
    b = LatticeBasis(*pair)
    r = gauss_reduce(b)
    bound = 3 * max(r.gram()[:2])
    ours = {p for p, _, _ in mosaic_points(b, bound)}
    assert ours == {p for p, _, _ in mosaic_points(r, bound)}
    # Primitive lattice vectors, found by grid scan, one per sign class.
    prim = set()
    for p in lattice_points(b, bound):
        c = cross(b.v, b.w)
        al, be = cross(p, b.w) // c, cross(b.v, p) // c
        if gcd(al, be) == 1:
            prim.add(sign_representative(p))
    assert ours == prim
