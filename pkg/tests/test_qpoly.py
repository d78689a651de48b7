from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import _oracle as O
from conftest import laurent, nonzero_laurent, ordinary, ratfuns
from qverify.errors import BothZero, DivisionByZero, InvalidIndex, NotOrdinary, ParseError, ZeroBase, ZeroDivisor
from qverify.qpoly import (
    LaurentPoly,
    RationalFunction,
    cyclotomic,
    laurent_arith,
    laurent_eval,
    parse_poly,
    parse_ratfun,
    poly_divrem,
    poly_gcd,
    ratfun_arith,
    render_poly,
)

q = LaurentPoly.monomial(1)
one = LaurentPoly.const(1)


def P(*coeffs):
    return LaurentPoly.from_coeffs(coeffs)


def dense(p: LaurentPoly):
    if not p:
        return []
    return [Fraction(str(p.coeff(e))) for e in range(p.max_exp + 1)]


# -- laurent_arith ------------------------------------------------------------------


def test_laurent_examples():
    assert laurent_arith(q - 1, q + 1, "mul") == q * q - 1
    assert laurent_arith(LaurentPoly.monomial(-1), q, "mul") == one
    zero = laurent_arith(1 + q, -1 - q, "add")
    assert not zero and zero.terms == {}
    assert laurent_arith(q, one, "sub") == q - 1
    assert laurent_arith(q, q, "neg") == -q


def test_no_stored_zeros():
    p = LaurentPoly({0: 1, 3: 0, -2: Fraction(0)})
    assert dict(p.terms) == {0: 1}


# -- division and gcd -------------------------------------------------------------------


def test_divrem_examples():
    assert poly_divrem(q * q - 1, q - 1) == (q + 1, LaurentPoly())
    assert poly_divrem(q * q, P(1, 1, 1)) == (one, -q - 1)
    assert poly_divrem(q, q * q) == (LaurentPoly(), q)


def test_divrem_errors():
    with pytest.raises(ZeroDivisor):
        poly_divrem(q, LaurentPoly())
    with pytest.raises(NotOrdinary):
        poly_divrem(LaurentPoly.monomial(-1), q)


def test_gcd_examples():
    assert poly_gcd(q**2 - 1, q**3 - 1) == q - 1
    assert poly_gcd(P(1, 1, 1), q - 1) == one
    assert poly_gcd(LaurentPoly(), 2 * q + 2) == q + 1
    with pytest.raises(BothZero):
        poly_gcd(LaurentPoly(), LaurentPoly())


@given(ordinary(), ordinary().filter(bool))
def test_divrem_roundtrip(a, b):
    quo, rem = poly_divrem(a, b)
    assert quo * b + rem == a
    assert not rem or rem.max_exp < b.max_exp
    # against schoolbook long division
    oq, orem = O.pdivmod(dense(a), dense(b))
    assert dense(quo) == oq and dense(rem) == orem


@given(ordinary(), ordinary())
def test_gcd_matches_euclid(a, b):
    if not a and not b:
        return
    g = poly_gcd(a, b)
    assert dense(g) == O.pgcd(dense(a), dense(b))
    assert not poly_divrem(a, g)[1] and not poly_divrem(b, g)[1]


# -- cyclotomic ---------------------------------------------------------------------------


def test_cyclotomic_examples():
    assert cyclotomic(1) == q - 1
    assert cyclotomic(2) == q + 1
    assert cyclotomic(6) == P(1, -1, 1)
    with pytest.raises(InvalidIndex):
        cyclotomic(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 9, 12, 15, 30, 45])
def test_cyclotomic_against_reference(n):
    assert dense(cyclotomic(n)) == O.cyclo(n)


def test_cyclotomic_product_and_square():
    for n in range(1, 201):
        prod = one
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == LaurentPoly({n: 1, 0: -1})
    for n in range(3, 100, 2):
        phi = cyclotomic(n)
        assert phi.subs_monomial(2) == phi * phi.subs_monomial(1, -1)


# -- rational functions -------------------------------------------------------------------


def test_ratfun_examples():
    assert RationalFunction(q * q - 1, q - 1) == RationalFunction(q + 1)
    s = ratfun_arith(RationalFunction(one, 1 - q), RationalFunction(one, 1 + q), "add")
    assert s == RationalFunction(LaurentPoly.const(2), 1 - q * q)
    assert s.den == q * q - 1 and s.num == LaurentPoly.const(-2)  # monic denominator
    r = RationalFunction(1 - q, q - q * q)
    assert r == RationalFunction.qpow(-1) and r.den == one
    with pytest.raises(DivisionByZero):
        ratfun_arith(RationalFunction(one), RationalFunction(), "div")


def test_canonical_form_shape():
    r = RationalFunction(P(0, 0, 2, 2), P(0, 3, -3))  # 2q^2(1+q) / (3q(1-q))
    num, den = r.num, r.den
    assert den.min_exp == 0 and den.leading() == 1 and den.coeff(0) != 0
    assert poly_gcd(num.shift(-num.min_exp), den) == one


@given(ratfuns, ratfuns, ratfuns)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert (a - b) + b == a
    if b:
        assert (a / b) * b == a


@given(laurent(), laurent(), laurent())
def test_ring_axioms_laurent(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(ratfuns, ratfuns)
def test_equality_decides(a, b):
    assert (a == b) == (not (a - b))
    # canonicalizing a canonical value is a no-op
    again = RationalFunction(a.num, a.den)
    assert again == a and again.flint_parts() == a.flint_parts()


@given(laurent(), laurent(), st.sampled_from([Fraction(1, 2), Fraction(-3), Fraction(2, 7)]))
def test_eval_homomorphism(a, b, x):
    assert laurent_eval(a * b, x) == laurent_eval(a, x) * laurent_eval(b, x)


# -- evaluation and text ---------------------------------------------------------------------


def test_eval_examples():
    assert laurent_eval(q * q + 1, 2) == 5
    assert laurent_eval(LaurentPoly.monomial(-1), Fraction(1, 2)) == 2
    with pytest.raises(ZeroBase):
        laurent_eval(LaurentPoly.monomial(-1), 0)


def test_render():
    assert render_poly(cyclotomic(6)) == "q^2 - q + 1"
    assert render_poly(cyclotomic(1)) == "q - 1"
    assert render_poly(LaurentPoly()) == "0"
    assert render_poly(LaurentPoly({-2: Fraction(-3, 2), 0: 1})) == "1 - 3/2*q^-2"


@given(laurent())
def test_render_parse_roundtrip(p):
    assert parse_poly(render_poly(p)) == p


def test_parse():
    assert parse_poly("q^2 - q + 1") == cyclotomic(6)
    assert parse_poly("-q^(-1) + 2/3") == LaurentPoly({-1: -1, 0: Fraction(2, 3)})
    assert parse_ratfun("(q^2 - 1) / (q - 1)") == RationalFunction(q + 1)
    for bad in ("", "q q", "3*", "+"):
        with pytest.raises(ParseError):
            parse_poly(bad)
