"""Binomial conventions and q-analogue identities."""

from pasep.laurent import ONE, Q, ZERO, LaurentPoly
from pasep.qcombinat import binomial, catalan, q_binomial, q_int


def test_binomial_convention():
    assert binomial(4, -1) == 0
    assert binomial(6, 3) == 20
    assert binomial(4, 5) == 0
    assert binomial(-2, 0) == 0
    # used in the k=0 column of the alternating sums
    assert binomial(4, 2) - binomial(4, 0) == 5


def test_q_int():
    assert q_int(0) == ZERO
    assert q_int(1) == ONE
    assert q_int(3) == ONE + Q + Q**2


def test_q_int_splitting():
    for a in range(8):
        for b in range(8):
            assert q_int(a + b) == q_int(a) + LaurentPoly.monomial(1, a, 0) * q_int(b)


def test_q_binomial_examples():
    assert q_binomial(2, 1) == ONE + Q
    assert q_binomial(4, 2) == ONE + Q + 2 * Q**2 + Q**3 + Q**4
    assert q_binomial(3, 5) == ZERO
    assert q_binomial(3, -1) == ZERO


def test_q_binomial_specialises_to_binomial():
    for n in range(13):
        for k in range(n + 1):
            assert q_binomial(n, k).eval_q(1).to_int() == binomial(n, k)


def test_q_binomial_symmetry_and_pascal():
    for n in range(15):
        for k in range(n + 1):
            assert q_binomial(n, k) == q_binomial(n, n - k)
            if n:
                assert q_binomial(n, k) == q_binomial(n - 1, k - 1) + (
                    LaurentPoly.monomial(1, k, 0) * q_binomial(n - 1, k)
                )


def test_q_binomial_nonnegative():
    for n in range(12):
        for k in range(n + 1):
            assert all(c > 0 for _, _, c in q_binomial(n, k).terms())


def test_catalan():
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
