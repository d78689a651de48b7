from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import _oracle as O
from conftest import nonzero_rationals
from qverify.errors import InvalidIndex, SingularFactor, SingularLowerParameter
from qverify.qpoly import LaurentPoly, RationalFunction, laurent_eval
from qverify.qseries import (
    PochhammerSpec,
    central_rise,
    hahn,
    pfall,
    phi32,
    poch,
    poch_spec,
    q_binomial,
    q_integer,
)

q = LaurentPoly.monomial(1)


def F(x):
    return Fraction(str(x))

Q = RationalFunction(q)
one = LaurentPoly.const(1)


def qp(e, c=1):
    return RationalFunction.qpow(e, c)


def om(c, e):
    return RationalFunction.one_minus(c, e)


def test_poch_examples():
    assert poch(2, 2) == RationalFunction(LaurentPoly({0: -1, 1: 2}))
    assert poch(Q, 3) == om(1, 1) * om(1, 2) * om(1, 3)
    assert poch(qp(2), -1) == om(1, 1).inverse()
    assert poch_spec(PochhammerSpec(qp(1), 2, 2)) == om(1, 1) * om(1, 3)
    with pytest.raises(SingularFactor):
        poch(qp(2), -2)  # 1 - q^2 q^-2 = 0 in a denominator
    with pytest.raises(InvalidIndex):
        PochhammerSpec(Q, 0, 1)


@given(nonzero_rationals, st.integers(-5, 5), st.integers(-5, 5), st.integers(1, 2))
def test_poch_split(a, m, n, s):
    # a = 1 puts the factor 1 - q^0 into a denominator for some (m, n)
    assume(a != 1)
    assert poch(a, m + n, s) == poch(a, m, s) * poch(qp(s * m, a), n, s)


@given(nonzero_rationals, st.integers(-4, 6), st.sampled_from([Fraction(1, 3), Fraction(-2), Fraction(5, 7)]))
def test_poch_numeric(a, n, x):
    assume(all(a * x ** (-k) != 1 for k in range(1, -n + 1)))
    assert F(poch(a, n).evaluate(x)) == O.poch(a, n, x)


def test_q_binomial_examples():
    for n in range(6):
        assert q_binomial(n, 0) == one
    assert q_binomial(2, 1) == 1 + q
    assert q_binomial(4, 2) == LaurentPoly.from_coeffs([1, 1, 2, 1, 1])
    assert not q_binomial(3, -1) and not q_binomial(3, 4)


def test_q_pascal():
    for n in range(0, 20):
        for k in range(0, n + 2):
            assert q_binomial(n + 1, k) == q_binomial(n, k).shift(k) + q_binomial(n, k - 1)


@given(nonzero_rationals, st.integers(0, 15))
def test_q_binomial_theorem(z, m):
    rhs = sum(
        (RationalFunction(q_binomial(m, k)) * qp(k * (k - 1) // 2, (-z) ** k) for k in range(m + 1)),
        RationalFunction(),
    )
    assert poch(z, m) == rhs


def test_reindex_and_shift():
    for n in range(1, 22, 2):
        for k in range((n - 1) // 2 + 1):
            assert poch(qp(n - 2 * k + 1), k, 2) == qp(k * (n - k), (-1) ** k) * poch(qp(1 - n), k, 2)
    for k in range(6):
        for m in range(1, 6):
            lhs = poch(qp(-2 * k - 2 * m + 2), m - 1, 2)
            rhs = qp(-(m - 1) * (2 * k + m), (-1) ** (m - 1)) * poch(qp(2), m + k - 1, 2) / poch(qp(2), k, 2)
            assert lhs == rhs


def test_limit_q_to_one():
    for n in range(13):
        for k in range(n + 1):
            assert laurent_eval(q_binomial(n, k), 1) == comb(n, k)


def test_q_integer():
    assert not q_integer(0)
    assert q_integer(1) == one
    assert q_integer(3) == 1 + q + q * q


def test_hahn():
    b, x = Fraction(2, 3), Fraction(-5, 4)
    assert hahn(0, b, x) == RationalFunction(one)
    assert hahn(1, b, x) == RationalFunction.const(1 + (1 - b) * x)
    want = 1 + (1 + Q) * (1 - b) * x + (1 - b) * om(b, 1) * x * x
    assert hahn(2, b, x) == want


def test_phi32():
    assert phi32(Fraction(1, 2), 3, 0, 5) == RationalFunction(one)
    assert phi32(0, 0, 1, 2) == RationalFunction.const(2)
    with pytest.raises(SingularLowerParameter):
        phi32(2, 3, 2, 1)


@given(nonzero_rationals, nonzero_rationals, nonzero_rationals, st.integers(0, 5))
def test_phi32_numeric(a1, a2, b2, k):
    x = Fraction(3, 5)
    want = Fraction(0)
    for i in range(k + 1):
        den = O.poch(x, i, x) * O.poch(b2, i, x)
        assume(den != 0)
        want += O.poch(a1, i, x) * O.poch(a2, i, x) * O.poch(x**-k, i, x) * x**i / den
    assume(b2 != 1)
    assert F(phi32(a1, a2, k, b2).evaluate(x)) == want


def test_pfall():
    x, y = Fraction(3), Fraction(1, 2)
    assert pfall(x, y, 0) == RationalFunction(one)
    assert pfall(x, y, 1) == RationalFunction.const(x - y)
    assert pfall(x, y, 2) == (x - y) * (x - y * Q)


def test_central_rise():
    assert central_rise(0, 2) == 3
    assert central_rise(7, 0) == 1 and central_rise(-3, 0) == 1
    assert central_rise(-1, 2) == -1
    # 2^k (1/2)_k / k! = C(2k, k) / 2^k
    for k in range(12):
        assert Fraction(central_rise(0, k), factorial(k)) == Fraction(comb(2 * k, k), 2**k)
