import random

import pytest

from cogwork.errors import SingularMatrix
from cogwork.matrices import ExactMatrix, companion, pmonic
from cogwork.scalars import QQ, ScalarField


def _rand_invertible(rng, n):
    while True:
        m = ExactMatrix(QQ, [[QQ.rational(rng.randint(-3, 3)) for _ in range(n)]
                             for _ in range(n)])
        if m.det():
            return m


def test_inverse_and_det():
    rng = random.Random(5)
    for n in (2, 3, 4):
        m = _rand_invertible(rng, n)
        assert m * m.inverse() == ExactMatrix.identity(QQ, n)
        assert m.inverse() * m == ExactMatrix.identity(QQ, n)
    with pytest.raises(SingularMatrix):
        ExactMatrix(QQ, [[QQ.one, QQ.one], [QQ.one, QQ.one]]).inverse()


def test_asymmetry_of_eq():
    # E_q = ((0,1),(-1/q,0)) has E^{-1}E^t = diag(-q, -1/q)
    F = ScalarField("q")
    q = F.param("q")
    E = ExactMatrix(F, [[F.zero, F.one], [-F.one / q, F.zero]])
    asym = E.asymmetry()
    assert asym == ExactMatrix(F, [[-q, F.zero], [F.zero, -F.one / q]])
    assert asym.trace() == -q - F.one / q


def test_specialized_asymmetry_trace():
    # tr(E_q^{-1} E_q^t) at q=2 is -5/2
    F = ScalarField("q")
    E = ExactMatrix.from_strs(F, [["0", "1"], ["-1/q", "0"]])
    assert F.specialize(E.asymmetry().trace(), {"q": 2}) == QQ.rational(-5, 2)


def test_rcf_identity():
    I2 = ExactMatrix.identity(QQ, 2)
    assert I2.rational_canonical_form() == I2
    assert [pmonic(f) for f in I2.invariant_factors()] == \
        [[-QQ.one, QQ.one], [-QQ.one, QQ.one]]


def test_rcf_distinct_eigenvalues():
    m = ExactMatrix(QQ, [[QQ.rational(2), QQ.zero], [QQ.one, QQ.rational(3)]])
    d = ExactMatrix(QQ, [[QQ.rational(2), QQ.zero], [QQ.zero, QQ.rational(3)]])
    assert m.rational_canonical_form() == d.rational_canonical_form()
    # char poly (x-2)(x-3) = x^2 - 5x + 6, single companion block
    assert m.rational_canonical_form() == companion(
        QQ, [QQ.rational(6), QQ.rational(-5), QQ.one])


def test_rcf_of_eq_asymmetry():
    # diag(-q, -1/q) has minimal polynomial x^2 + (q + 1/q)x + 1
    F = ScalarField("q")
    q = F.param("q")
    asym = ExactMatrix(F, [[-q, F.zero], [F.zero, -F.one / q]])
    assert asym.rational_canonical_form() == companion(
        F, [F.one, q + F.one / q, F.one])


def test_rcf_conjugation_invariant():
    rng = random.Random(17)
    for _ in range(8):
        n = rng.choice((2, 3))
        m = ExactMatrix(QQ, [[QQ.rational(rng.randint(-2, 2)) for _ in range(n)]
                             for _ in range(n)])
        p = _rand_invertible(rng, n)
        conj = p * m * p.inverse()
        assert conj.rational_canonical_form() == m.rational_canonical_form()


def test_rcf_non_diagonalizable():
    j = ExactMatrix(QQ, [[QQ.one, QQ.one], [QQ.zero, QQ.one]])
    # Jordan block: single invariant factor (x-1)^2
    assert j.rational_canonical_form() == companion(QQ, [QQ.one, QQ.rational(-2), QQ.one])
    d = ExactMatrix.identity(QQ, 2)
    assert j.rational_canonical_form() != d.rational_canonical_form()
