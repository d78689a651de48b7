from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import _oracle as O
from conftest import nonzero_rationals
from qverify.errors import InvalidIndex, ParamMissing, SingularSample, UnknownId
from qverify.identities import (
    AA_READINGS,
    REGISTRY,
    IdentityCase,
    _carlitz,
    _delta_ratio,
    _gen_m,
    _wang_aa,
    aa_inner,
    aa_rhs_phi,
    carlitz_terms,
    gen_basic_terms,
    op_identity_operators,
    sample_case,
    verify_identity,
)
from qverify.operators import GridFunction, op_apply
from qverify.qpoly import RationalFunction
from qverify.qseries import phi32, poch, poch_table, q_binomial_rf
from qverify.report import FAIL, PASS

Q = RationalFunction.qpow(1)
half, third = Fraction(1, 2), Fraction(1, 3)
not_one = nonzero_rationals.filter(lambda a: a != 1)


def qp(e, c=1):
    return RationalFunction.qpow(e, c)


def F(x):
    return Fraction(str(x))


def test_carlitz_n1_closed_form():
    rep = verify_identity(IdentityCase("CARLITZ", 1, {}, {"a": half, "b": third}))
    assert rep.status == PASS
    [(_, lhs, rhs)] = _carlitz(1, {}, {"a": half, "b": third})
    want = (1 - half - third + half * third * Q) / (1 - Q)
    assert lhs == want and rhs == want


def test_carlitz_n0():
    [(_, lhs, rhs)] = _carlitz(0, {}, {"a": Fraction(-4, 7), "b": Fraction(9, 2)})
    assert lhs == 1 and rhs == 1


@given(not_one, nonzero_rationals, st.integers(0, 8))
def test_carlitz_numeric_reference(a, b, n):
    # both sides at q = 2/5, each computed straight from the formula with Fractions
    x = Fraction(2, 5)
    lhs = sum(
        O.poch(a, k, x) * O.poch(b, k, x) / O.poch(x, k, x) * (-a * b) ** (n - k) * x ** (O.c2(n) - O.c2(k))
        for k in range(n + 1)
    )
    rhs = sum(
        O.poch(a, n + 1, x) * (-b) ** k * x ** O.c2(k)
        / (O.poch(x, k, x) * O.poch(x, n - k, x) * (1 - a * x ** (n - k)))
        for k in range(n + 1)
    )
    assert lhs == rhs
    tl, tr = carlitz_terms(n, a, b)
    assert F(sum(tl, RationalFunction()).evaluate(x)) == lhs


def test_gen_m_one_is_carlitz():
    case = sample_case("GEN_M", 4, {"m": 1}, seed=5)
    s = case.sample
    assert verify_identity(case).status == PASS
    assert _gen_m(4, {"m": 1}, s)[0][1:] == _carlitz(4, {}, s)[0][1:]


@given(nonzero_rationals, nonzero_rationals.filter(lambda v: v != 1), nonzero_rationals)
def test_delta_ratio_n1(a, x, y):
    if a * y == 1:
        return
    [(_, lhs, rhs)] = _delta_ratio(1, {}, {"a": a, "x": x, "y": y})
    want = RationalFunction.const(a * (y - x) / (1 - a * y))
    assert lhs == want and rhs == want


@given(not_one, nonzero_rationals, st.integers(0, 8))
def test_gen_basic_reproduces_carlitz_termwise(a, b, n):
    gl, gr = gen_basic_terms(n, a, b, 1, Q)
    cl, cr = carlitz_terms(n, a, b)
    qq = poch(Q, n)
    assert gl == [t * qq for t in cl]
    assert gr == [t * qq for t in cr]


@pytest.mark.parametrize("ident", ["OP_BASIC", "OP_HAHN", "OP_AA"])
def test_operator_identities_on_constants(ident):
    case = sample_case(ident, 4, seed=11)
    L, R = op_identity_operators(ident, 4, case.sample)
    f = GridFunction(case.sample["a"], case.sample["b"], lambda i, j: RationalFunction.const(3))
    lhs, rhs = op_apply(L, f), op_apply(R, f)
    assert lhs == rhs
    if ident == "OP_BASIC":
        # only the eta_a^n term of the left side survives on constants: b^0 (b;q)_n
        b = case.sample["b"]
        assert lhs == 3 * poch(b, 4)


@pytest.mark.parametrize("ident", list(REGISTRY))
def test_registry_small(ident):
    spec = REGISTRY[ident]
    for n in spec.n_values(5):
        extras = [{"m": m} for m in range(1, 4)] if "m" in spec.extras else [{}]
        for extra in extras:
            for trial in range(2):
                rep = verify_identity(sample_case(ident, n, extra, seed=3, trial=trial))
                assert rep.status == PASS, rep.detail


# -- AA family readings -------------------------------------------------------------


def _aa_sample(seed):
    return sample_case("WANG_AA", 3, seed=seed).sample


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_aa_printed_readings_fail(seed):
    s = _aa_sample(seed)
    outcome = {}
    for reading in AA_READINGS:
        [(_, lhs, rhs)] = _wang_aa(3, {}, s, reading)
        outcome[reading] = lhs == rhs
    assert outcome == {"vs,vt": False, "us,vt": False, "us,ut": True}


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_aa_equivalent_reading(seed):
    # "vs,vt" holds once (-1/u)^k is replaced by (-1/v)^k
    s = _aa_sample(seed)
    n = 3
    a, u, v, ss, t = (RationalFunction.const(s[k]) for k in "auvst")
    [(_, lhs, _)] = _wang_aa(n, {}, s, "us,ut")
    pa, qq = poch_table(a, n + 1), poch_table(Q, n)
    rhs = sum(
        (q_binomial_rf(n, k) * (-1 / v) ** k * qp(k * (k - 1) // 2) / (1 - a * qp(n - k))
         * phi32(v * ss, v * t, k, u * v * ss * t) for k in range(n + 1)),
        RationalFunction(),
    ) * pa[n + 1] / qq[n]
    assert lhs == rhs
    for k in range(5):
        assert aa_rhs_phi(k, *(s[c] for c in "uvst"), reading="us,ut") == (
            (u / v) ** k * aa_rhs_phi(k, *(s[c] for c in "uvst"), reading="vs,vt"))


def test_aa_report_notes_each_reading():
    rep = verify_identity(sample_case("OP_AA", 2, seed=0))
    assert rep.status == PASS
    assert rep.notes == ["reading vs,vt: fail", "reading us,vt: fail", "reading us,ut: pass"]


def test_aa_inner_k0():
    # with k = 0 the inner sum is the single 3phi2 in (vs, vt)
    s = _aa_sample(4)
    u, v, ss, t = (s[c] for c in "uvst")
    assert aa_inner(3, 0, u, v, ss, t) == phi32(v * ss, v * t, 3, u * v * ss * t)


# -- sampling and errors ------------------------------------------------------------


def test_sampling_is_deterministic():
    a = sample_case("GEN_AA", 5, seed=42, trial=3)
    b = sample_case("GEN_AA", 5, seed=42, trial=3)
    c = sample_case("GEN_AA", 5, seed=42, trial=4)
    assert a == b and a.sample != c.sample
    assert all(v != 0 for v in a.sample.values())
    assert all(abs(v.p) <= 9 and abs(v.q) <= 9 for v in a.sample.values())


def test_fixed_samples_override():
    case = sample_case("CARLITZ", 3, fixed={"a": "2/3", "b": -5})
    assert {k: F(v) for k, v in case.sample.items()} == {"a": Fraction(2, 3), "b": -5}


def test_errors():
    with pytest.raises(UnknownId):
        verify_identity(IdentityCase("NOPE", 1, {}, {}))
    with pytest.raises(ParamMissing):
        verify_identity(IdentityCase("CARLITZ", 1, {}, {"a": half}))
    with pytest.raises(ParamMissing):
        verify_identity(IdentityCase("GEN_M", 1, {}, {"a": half, "b": half}))
    with pytest.raises(SingularSample):
        verify_identity(IdentityCase("CARLITZ", 1, {}, {"a": 1, "b": half}))
    with pytest.raises(SingularSample):
        verify_identity(IdentityCase("CARLITZ", 1, {}, {"a": 0, "b": half}))
    with pytest.raises(SingularSample):
        sample_case("CARLITZ", 2, fixed={"a": 1, "b": 2})
    with pytest.raises(InvalidIndex):
        verify_identity(IdentityCase("CARLITZ", -1, {}, {"a": half, "b": half}))


def test_fail_detail_is_difference():
    rep = verify_identity(IdentityCase("WANG_AA", 1, {}, _aa_sample(0)))
    assert rep.status == PASS  # via the third reading
    from qverify.identities import IdentitySpec, _wang_hahn

    spec = REGISTRY["WANG_HAHN"]
    broken = IdentitySpec("WANG_HAHN", spec.anchor, spec.symbols, spec.extras, spec.n_range,
                          lambda n, e, s: [("sides", Q, Q + 1)])
    REGISTRY["WANG_HAHN"] = broken
    try:
        bad = verify_identity(IdentityCase("WANG_HAHN", 1, {}, {"a": half, "b": half, "x": half}))
    finally:
        REGISTRY["WANG_HAHN"] = spec
    assert bad.status == FAIL and bad.detail == "sides: -1"
