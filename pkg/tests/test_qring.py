from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import _oracle as O
from conftest import laurent, ratfuns
from qverify.errors import InvalidIndex, ModulusMismatch, NotInvertible
from qverify.qpoly import LaurentPoly, RationalFunction, cyclotomic, poly_gcd
from qverify.qring import Residue, make_modulus, reduce, residue_inverse, residue_is_zero

q = LaurentPoly.monomial(1)
one = LaurentPoly.const(1)


def dense(p):
    return [Fraction(str(p.coeff(e))) for e in range(p.max_exp + 1)] if p else []


def test_make_modulus():
    assert make_modulus(3, 1).poly == q * q + q + 1
    assert make_modulus(2, 2).poly == q * q + 2 * q + 1
    assert make_modulus(4, 1).poly == q * q + 1
    M = make_modulus(9, 3)
    assert M.poly == cyclotomic(9) ** 3 and M.degree == 18
    for n, r in ((1, 1), (0, 2), (5, 0)):
        with pytest.raises(InvalidIndex):
            make_modulus(n, r)


def test_reduce_examples():
    M = make_modulus(3, 1)
    assert reduce(q**3, M).rep == one
    inv = reduce(RationalFunction(one, 1 - q), M)
    assert inv.rep == LaurentPoly({0: Fraction(2, 3), 1: Fraction(1, 3)})
    # reference: (1-q)(2+q)/3 is 1 mod q^2+q+1
    _, r = O.pdivmod(O.pmul([1, -1], [Fraction(2, 3), Fraction(1, 3)]), O.cyclo(3))
    assert r == [1]
    with pytest.raises(NotInvertible):
        reduce(RationalFunction(one, 1 - q**3), M)


def test_inverse_examples():
    M = make_modulus(3, 1)
    # q^2 has canonical representative -q - 1 modulo q^2 + q + 1
    assert residue_inverse(reduce(q, M)) == reduce(q * q, M)
    assert reduce(q * q, M).rep == -q - 1
    assert residue_inverse(reduce(one, M)).rep == one
    with pytest.raises(NotInvertible):
        residue_inverse(reduce(1 - q**3, make_modulus(3, 2)))


def test_is_zero_examples():
    M = make_modulus(3, 2)
    assert residue_is_zero(reduce((1 - q**6) - 2 * (1 - q**3), M))
    assert not residue_is_zero(reduce(1 - q**3, M))
    assert residue_is_zero(reduce(LaurentPoly(), make_modulus(7, 1)))


def test_mixed_moduli_rejected():
    with pytest.raises(ModulusMismatch):
        reduce(q, make_modulus(3, 1)) + reduce(q, make_modulus(5, 1))


def test_negative_powers_use_unit_q():
    M = make_modulus(5, 2)
    assert reduce(LaurentPoly.monomial(-3), M) * reduce(q**3, M) == reduce(one, M)


@pytest.mark.parametrize("n", range(2, 30))
def test_qn_minus_one(n):
    assert residue_is_zero(reduce(q**n - 1, make_modulus(n, 1)))
    M2 = make_modulus(n, 2)
    assert residue_is_zero(reduce((1 - q**n) ** 2, M2))
    assert not residue_is_zero(reduce(1 - q**n, M2))
    if n % 2 and n >= 3:
        assert residue_is_zero(reduce((1 - q ** (2 * n)) - 2 * (1 - q**n), M2))


moduli = st.sampled_from([(3, 1), (5, 2), (7, 1), (9, 2), (15, 3), (4, 2)])


@given(moduli, laurent(), laurent())
def test_reduce_homomorphism(nr, a, b):
    M = make_modulus(*nr)
    assert reduce(a + b, M) == reduce(a, M) + reduce(b, M)
    assert reduce(a * b, M) == reduce(a, M) * reduce(b, M)


@given(moduli, ratfuns, ratfuns)
def test_reduce_homomorphism_ratfun(nr, a, b):
    M = make_modulus(*nr)
    phi = cyclotomic(nr[0])
    for x in (a, b):
        assume(poly_gcd(x.den, phi) == one)
    assert reduce(a * b, M) == reduce(a, M) * reduce(b, M)
    assert reduce(a - b, M) == reduce(a, M) - reduce(b, M)


@given(moduli, laurent(0, 8))
def test_inverse_property(nr, a):
    M = make_modulus(*nr)
    x = reduce(a, M)
    assume(poly_gcd(x.rep, cyclotomic(nr[0])) == one)
    y = residue_inverse(x)
    assert x * y == reduce(one, M)
    # against a hand-rolled extended Euclid
    assert dense(y.rep) == O.pxgcd_inverse(dense(x.rep), dense(M.poly))


@given(moduli, laurent(0, 30))
def test_rep_is_remainder(nr, a):
    M = make_modulus(*nr)
    x = reduce(a, M)
    assert not x.rep or x.rep.max_exp < M.degree
    assert dense(x.rep) == O.pdivmod(dense(a), dense(M.poly))[1]
