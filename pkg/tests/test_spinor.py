from hypothesis import given

from apollonian.spinor import (
    ZERO,
    Spinor,
    add,
    cross,
    dot,
    neg,
    norm_sq,
    sign_representative,
    sub,
    symp_conj,
)

from strategies import spinors

A, B = Spinor(1, -2), Spinor(2, 2)


def test_dot_examples():
    assert dot(A, B) == -2
    assert dot(Spinor(0, 0), Spinor(5, 7)) == 0
    assert dot(Spinor(3, 4), Spinor(3, 4)) == 25


def test_cross_examples():
    assert cross(A, B) == 6
    assert cross(Spinor(5, 2), Spinor(7, 4)) == 6
    assert cross(Spinor(3, 9), Spinor(3, 9)) == 0


def test_symp_conj_examples():
    assert symp_conj(Spinor(1, 0)) == Spinor(0, 1)
    assert symp_conj(symp_conj(Spinor(3, 5))) == Spinor(-3, -5)
    assert cross(Spinor(2, 3), Spinor(4, 1)) == dot(symp_conj(Spinor(2, 3)), Spinor(4, 1)) == -10


def test_componentwise_ops():
    assert add(A, B) == Spinor(3, 0)
    assert sub(A, B) == Spinor(-1, -4)
    assert neg(A) == Spinor(-1, 2)
    assert norm_sq(A) == 5
    assert 3 * A == Spinor(3, -6)


def test_value_semantics_and_json():
    assert Spinor.of([1, -2]) == A
    assert Spinor.of(A) is A
    assert hash(Spinor(1, -2)) == hash(A)
    assert A.to_json() == [1, -2]
    assert list(A) == [1, -2]


def test_sign_representative():
    assert sign_representative(Spinor(-1, 4)) == Spinor(1, -4)
    assert sign_representative(Spinor(0, -3)) == Spinor(0, 3)
    assert sign_representative(ZERO) == ZERO


def test_big_integers_exact():
    big = Spinor(10**40 + 1, -(10**39))
    assert cross(big, big) == 0
    assert norm_sq(big) == (10**40 + 1) ** 2 + 10**78


@given(spinors(), spinors())
def test_lagrange_identity(a, b):
    assert cross(a, b) ** 2 + dot(a, b) ** 2 == norm_sq(a) * norm_sq(b)


@given(spinors(), spinors())
def test_symplectic_identities(a, b):
    assert cross(a, b) == -cross(b, a)
    assert dot(symp_conj(a), symp_conj(b)) == dot(a, b)
    assert cross(symp_conj(a), symp_conj(b)) == cross(a, b)
    assert cross(symp_conj(a), b) == cross(symp_conj(b), a)
    assert cross(a, b) == dot(symp_conj(a), b)


@given(spinors())
def test_orthogonal_to_conjugate(a):
    assert dot(a, symp_conj(a)) == 0
    assert norm_sq(a) == dot(a, a) >= 0
    assert sign_representative(a) in (a, -a)
