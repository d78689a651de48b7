"""Registry of the q-congruences modulo Phi_n(q)^r and the prime corollaries.

Each statement is written once against a small algebra interface.  The
residue algebra reduces every factor into Q[q]/Phi_n^r as it goes (q is a
unit there, so negative powers are fine); the symbolic algebra builds both
sides as exact rational functions and reduces only the final difference.
The second route is slow and serves as an oracle for small n.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np
from flint import fmpq, fmpq_poly

from .errors import BoundViolation, InvalidIndex, NotCoprime, ParamOutOfRange, UnknownId
from .qpoly import RF_ONE, RF_ZERO, LaurentPoly, RationalFunction
from .qring import Modulus, Residue, make_modulus, reduce
from .qseries import q_binomial, q_integer
from .report import FAIL, PASS, CheckReport

__all__ = [
    "CongruenceCase",
    "CongruenceSpec",
    "PrimeCase",
    "PrimeSpec",
    "CONGRUENCES",
    "PRIMES",
    "ResidueAlgebra",
    "SymbolicAlgebra",
    "congruence_ids",
    "prime_ids",
    "get_congruence",
    "get_prime",
    "param_values",
    "sides",
    "verify_congruence",
    "psi_sum",
    "lhs_is_even",
    "consistency_chain",
    "verify_prime_congruence",
    "prime_sweep",
    "rise_sum_mod",
    "rise_sums_mod",
    "rise_sum_exact",
    "prime_params",
    "odd_primes",
    "sgn",
]


def sgn(d: int) -> int:
    return (d > 0) - (d < 0)


def _neg1(e: int) -> int:
    """(-1)**e as an int for any integer e."""
    return -1 if e % 2 else 1


def _half(n: int) -> int:
    return (n - 1) // 2


# -- algebras ---------------------------------------------------------------------


class ResidueAlgebra:
    """Arithmetic in Q[q]/M with every factor reduced on entry."""

    def __init__(self, M: Modulus):
        self.M = M
        self._one = Residue._raw(fmpq_poly([1]), M)

    def const(self, c) -> Residue:
        return Residue._raw(fmpq_poly([c]), self.M)

    def one(self):
        return self._one

    def qpow(self, e: int, c=1) -> Residue:
        p = self.M.qpow(e)
        return Residue._raw(p if c == 1 else p * fmpq(c), self.M)

    def om(self, c, e: int) -> Residue:
        """1 - c q^e."""
        return Residue._raw(self.M.one_minus(c, e), self.M)

    def inv_om(self, c, e: int) -> Residue:
        return Residue._raw(self.M.inv_one_minus(c, e), self.M)

    def inv(self, x: Residue) -> Residue:
        return Residue._raw(self.M.invert(x.rep_flint), self.M)

    def laurent(self, p: LaurentPoly) -> Residue:
        return reduce(p, self.M)

    def residue(self, x) -> Residue:
        return x


class SymbolicAlgebra:
    """Exact rational functions in q; reduction happens only at the end."""

    def __init__(self, M: Modulus):
        self.M = M

    def const(self, c) -> RationalFunction:
        return RationalFunction.const(c)

    def one(self):
        return RF_ONE

    def qpow(self, e: int, c=1) -> RationalFunction:
        return RationalFunction.qpow(e, c)

    def om(self, c, e: int) -> RationalFunction:
        return RationalFunction.one_minus(c, e)

    def inv_om(self, c, e: int) -> RationalFunction:
        return RationalFunction.one_minus(c, e).inverse()

    def inv(self, x: RationalFunction) -> RationalFunction:
        return x.inverse()

    def laurent(self, p: LaurentPoly) -> RationalFunction:
        return RationalFunction.from_laurent(p)

    def residue(self, x) -> Residue:
        return reduce(x, self.M)


def _poch(A, c, e: int, n: int, s: int = 1):
    """(c q^e; q^s)_n for any integer n."""
    out = A.one()
    if n >= 0:
        for j in range(n):
            out = out * A.om(c, e + s * j)
        return out
    for j in range(1, -n + 1):
        out = out * A.inv_om(c, e - s * j)
    return out


def _inv_poch(A, c, e: int, n: int, s: int = 1):
    """1 / (c q^e; q^s)_n for n >= 0."""
    out = A.one()
    for j in range(n):
        out = out * A.inv_om(c, e + s * j)
    return out


def _sum(A, terms):
    total = A.const(0)
    for t in terms:
        total = total + t
    return total


def _ratio_sum(A, upper: int, num: Callable[[int], tuple], den: Callable[[int], tuple], weight: Callable[[int], tuple]):
    """sum_{k=0}^{upper} prod_{j<k} (1 - c q^e)_num / (1 - c q^e)_den * weight(k).

    num(j), den(j) give (c, e) of the j-th factor; weight(k) gives (c, e) of
    the monomial c q^e multiplying the k-th term.
    """
    term = A.one()
    total = A.const(0)
    for k in range(upper + 1):
        if k:
            cn, en = num(k - 1)
            cd, ed = den(k - 1)
            term = term * A.om(cn, en) * A.inv_om(cd, ed)
        cw, ew = weight(k)
        total = total + term * A.qpow(ew, cw)
    return total


def _qint(A, n: int):
    return A.laurent(q_integer(n))


def _brace(A, j: int, d: int):
    """1 + (-1)^(j+d) + q^(2j-1) [(-1)^(j+d) - 1]."""
    if (j + d) % 2 == 0:
        return A.const(2)
    return A.qpow(2 * j - 1, -2)


def _half_brace_term(A, j: int, d: int, twice_exp: int):
    """q^(twice_exp / 2) times {1 + (-1)^(j+d) + q^(1/2 - j)[(-1)^(j+d) - 1]} / 2.

    The half-integer exponents cancel: for j + d even the brace is 2, for
    j + d odd it is -2 q^(1/2 - j).
    """
    if (j + d) % 2 == 0:
        assert twice_exp % 2 == 0
        return A.qpow(twice_exp // 2)
    total = twice_exp + 1 - 2 * j
    assert total % 2 == 0
    return A.qpow(total // 2, -1)


# -- statement sides ------------------------------------------------------------


def _s_qk(A, n: int, d: int, upper: int, w: int):
    """sum_{k=0}^{upper} (q^(2d+1); q^2)_k / (q;q)_k q^(w k)."""
    return _ratio_sum(A, upper, lambda j: (1, 2 * d + 1 + 2 * j), lambda j: (1, j + 1), lambda k: (1, w * k))


def _guo_tauraso(A, n, _):
    total = A.const(0)
    inv_neg = A.one()
    for k in range(n):
        if k:
            inv_neg = inv_neg * A.inv_om(-1, k)
        total = total + A.qpow(k) * inv_neg * A.laurent(q_binomial(2 * k, k))
    h = _half(n)
    return total, A.qpow((n * n - 1) // 4, _neg1(h))


def _th_main_m(A, n, m):
    lhs = _ratio_sum(
        A, n - m,
        lambda j: (1, 4 * m - 2 + 4 * j),
        lambda j: (1, 2 * j + 2),
        lambda k: (1, 3 * k - k * k - 4 * k * m),
    )
    rhs = A.qpow(-(n * n - 1) // 2 + 2 * m * m - 2 * m, _neg1(_half(n) + m - 1))
    return lhs, rhs


def _cor_m(w):
    def f(A, n, m):
        lhs = _ratio_sum(A, n - m, lambda j: (1, 2 * m - 1 + 2 * j), lambda j: (1, j + 1), lambda k: (1, w * k))
        e = (n * n - 1) // 4 - m * m + m if w == 1 else (n * n - 1) // 4 - m * m - m + 1
        return lhs, A.qpow(e, _neg1(_half(n) + m - 1))

    return f


def _th_main_d_correction(A, n, d):
    """Sgn(d)(1-q^n) q^(2d^2+3d) sum_j q^(j-2dj)(1+q^((4j-2)d))/(1-q^(4j-2)) {..}."""
    if d == 0:
        return A.const(0)
    inner = _sum(A, (
        A.qpow(j - 2 * d * j) * (A.one() + A.qpow((4 * j - 2) * d)) * A.inv_om(1, 4 * j - 2) * _brace(A, j, d)
        for j in range(1, abs(d) + 1)
    ))
    return A.om(1, n) * A.qpow(2 * d * d + 3 * d, sgn(d)) * inner


def _th_main_d(A, n, d):
    lhs = _ratio_sum(
        A, n - 1,
        lambda j: (1, 4 * d + 2 + 4 * j),
        lambda j: (1, 2 * j + 2),
        lambda k: (1, -4 * d * k - k * k - k),
    )
    rhs = A.qpow(-(n * n - 1) // 2 + 2 * d * d + 2 * d, _neg1(_half(n) + d)) + _th_main_d_correction(A, n, d)
    return lhs, rhs


def _cor_d_sum(A, n, d, shift: int):
    """Sgn(d)(1-q^n) sum_j q^(jd+2j-d^2-shift-(j+cd)/2)(1+q^(-(2j-1)d))/(1-q^(2j-1)) {..}/2.

    shift, c = (1, 3) for the q^k form and (2, 7) for the q^2k form.
    """
    if d == 0:
        return A.const(0)
    c = 3 if shift == 1 else 7
    inner = _sum(A, (
        _half_brace_term(A, j, d, 2 * (j * d + 2 * j - d * d - shift) - (j + c * d))
        * (A.one() + A.qpow(-(2 * j - 1) * d)) * A.inv_om(1, 2 * j - 1)
        for j in range(1, abs(d) + 1)
    ))
    return A.om(1, n) * inner * A.const(sgn(d))


def _cor_d_qk(A, n, d):
    lhs = _s_qk(A, n, d, n - 1, 1)
    rhs = A.qpow((n * n - 1) // 4 - d * d - d, _neg1(_half(n) + d)) + _cor_d_sum(A, n, d, 1)
    return lhs, rhs


def _cor_d_q2k(A, n, d):
    lhs = _s_qk(A, n, d, n - 1, 2)
    rhs = (
        A.qpow((n * n - 1) // 4 - d * d - 3 * d - 1, _neg1(_half(n) + d))
        - A.qpow(-2 * d - 1) * A.om(1, n)
        + _cor_d_sum(A, n, d, 2)
    )
    return lhs, rhs


def _wangyu_sum(A, n, d, base: Callable[[int], int]):
    if d == 0:
        return A.const(0)
    qn = _qint(A, n)
    inner = _sum(A, (
        A.const(_neg1(d - t)) * (A.one() + A.qpow(2 * t - 1)) * qn
        * A.qpow(-(base(d) - t * (t - 1))) * A.inv(_qint(A, 2 * t - 1))
        for t in range(1, abs(d) + 1)
    ))
    return inner * A.const(sgn(d))


def _wangyu_qk(A, n, d):
    lhs = _s_qk(A, n, d, n - 1, 1)
    e = (n * n - (2 * d + 1) ** 2)
    assert e % 4 == 0
    rhs = A.qpow(e // 4, _neg1(_half(n) + d)) + _wangyu_sum(A, n, d, lambda d: d * (d + 1))
    return lhs, rhs


def _wangyu_q2k(A, n, d):
    lhs = _s_qk(A, n, d, n - 1, 2)
    e = n * n - (2 * d + 1) * (2 * d + 5)
    assert e % 4 == 0
    rhs = (
        A.qpow(e // 4, _neg1(_half(n) + d))
        - A.om(1, 1) * A.qpow(-2 * d - 1) * _qint(A, n)
        + _wangyu_sum(A, n, d, lambda d: d * d + 3 * d + 1)
    )
    return lhs, rhs


def _intermediate(A, n, d):
    lhs = _s_qk(A, n, d, n - 1, 2)
    rhs = A.qpow(-2 * d - 1) * _s_qk(A, n, d, n - 1, 1) - A.qpow(-2 * d - 1) * A.om(1, n)
    return lhs, rhs


def _wangni(d, w, rhs_fn):
    def f(A, n, _):
        return _s_qk(A, n, d, n - 1, w), rhs_fn(A, n)

    return f


def _wn1(A, n):
    return A.qpow((n * n - 1) // 4, _neg1((n + 1) // 2)) - (A.one() + A.qpow(1)) * _qint(A, n)


def _wn2(A, n):
    return A.qpow((n * n + 3) // 4, _neg1((n + 1) // 2)) - A.qpow(1, 2) * _qint(A, n)


def _wn3(A, n):
    return A.qpow((n * n - 5) // 4, _neg1(_half(n))) + (A.qpow(1) - A.one()) * A.qpow(-1) * _qint(A, n)


def _wn4(A, n):
    return A.qpow((n * n - 9) // 4, _neg1((n + 1) // 2)) + (A.one() + A.qpow(1)) * A.qpow(-2) * _qint(A, n)


def _lem_poch(A, n, d):
    lhs = _poch(A, 1, 2 * d + 1, n, 2) * _inv_poch(A, 1, 1, n - 1)
    return lhs, A.om(1, n)


def _psi(A, n, d):
    h = _half(n)
    total = A.const(0)
    for k in range(-h, h + 1):
        if k == d:
            continue
        total = total + A.qpow(2 * d * k - k, _neg1(k % 2)) * A.inv_om(1, 2 * d - 2 * k)
    return total


def _lem_psi(A, n, d):
    h = _half(n)
    rhs = A.qpow(2 * d * d - d, _neg1((d + 1) % 2) * d)
    if d:
        inner = _sum(A, (
            A.qpow(j - 2 * d * j) * (A.one() + A.qpow((4 * j - 2) * d)) * A.inv_om(1, 4 * j - 2) * _brace(A, j, d)
            for j in range(1, abs(d) + 1)
        ))
        rhs = rhs + A.qpow(2 * d * d + h, sgn(d) * _neg1(h)) * inner
    return _psi(A, n, d), rhs


def _neg_q_sq(A, n):
    """(-q; q)_(n-1)^2."""
    p = _poch(A, -1, 1, n - 1)
    return p * p


def _qmorley_full(A, n, _):
    h = _half(n)
    lhs = A.qpow((n * n - 1) // 4, _neg1(h)) * A.laurent(q_binomial(n - 1, h, 2))
    one_minus = A.om(1, n)
    rhs = _neg_q_sq(A, n) - A.const(fmpq(n * n - 1, 24)) * one_minus * one_minus
    return lhs, rhs


def _qmorley_sq(A, n, _):
    h = _half(n)
    lhs = A.laurent(q_binomial(n - 1, h, 2))
    e = 1 - n * n
    return lhs, A.qpow(e // 4, _neg1(h)) * _neg_q_sq(A, n)


def _guo_binom(A, n, _):
    return A.laurent(q_binomial(2 * n - 1, n - 1)), A.qpow(n * (n - 1) // 2, _neg1(n - 1))


def _liu_sq(A, n, _):
    return A.om(1, 2 * n), A.om(1, n) * A.const(2)


# -- registry ---------------------------------------------------------------------


def _m_range(n):
    return list(range(1, (n + 1) // 2 + 1))


def _d_range(n):
    b = (n - 3) // 2
    return list(range(-b, b + 1))


@dataclass(frozen=True)
class CongruenceSpec:
    id: str
    r: int
    anchor: str
    param: str | None
    build: Callable
    n_range: tuple
    fixed_d: int | None = None
    suite: str = "congruences"

    def param_values(self, n: int) -> list:
        if self.param == "m":
            return _m_range(n)
        if self.param == "d":
            return _d_range(n)
        return [None]

    def schema(self) -> str:
        if self.param == "m":
            return "n odd, 1 <= m <= (n+1)/2"
        if self.param == "d":
            return "n odd, |d| <= (n-3)/2"
        return "n odd"

    def n_values(self, n_max: int | None = None) -> list:
        lo, hi = self.n_range
        if n_max is not None:
            hi = min(hi, n_max)
        return [n for n in range(lo, hi + 1) if n % 2 == 1]


CONGRUENCES: dict[str, CongruenceSpec] = {}


def _reg(*args, **kw):
    spec = CongruenceSpec(*args, **kw)
    CONGRUENCES[spec.id] = spec


_reg("GUO_TAURASO", 2, "sum of q^k [2k,k]/(-q;q)_k", None, _guo_tauraso, (3, 61))
_reg("TH_MAIN_M", 1, "m-family sum in base q^4", "m", _th_main_m, (3, 61))
_reg("COR_M_QK", 1, "m-family sum with q^k", "m", _cor_m(1), (3, 61))
_reg("COR_M_Q2K", 1, "m-family sum with q^2k", "m", _cor_m(2), (3, 61))
_reg("TH_MAIN_D", 2, "d-family sum in base q^4 with Sgn(d) correction", "d", _th_main_d, (3, 41))
_reg("COR_D_QK", 2, "d-family sum with q^k", "d", _cor_d_qk, (3, 41))
_reg("COR_D_Q2K", 2, "d-family sum with q^2k", "d", _cor_d_q2k, (3, 41))
_reg("WANGYU_QK", 2, "d-family q^k sum, [n] form", "d", _wangyu_qk, (3, 41))
_reg("WANGYU_Q2K", 2, "d-family q^2k sum, [n] form", "d", _wangyu_q2k, (3, 41))
_reg("INTERMEDIATE", 2, "q^2k sum against the q^k sum", "d", _intermediate, (3, 41))
_reg("WANGNI_1", 2, "d = -1, q^k sum", None, _wangni(-1, 1, _wn1), (3, 41), fixed_d=-1)
_reg("WANGNI_2", 2, "d = -1, q^2k sum", None, _wangni(-1, 2, _wn2), (3, 41), fixed_d=-1)
_reg("WANGNI_3", 2, "d = 0, q^2k sum", None, _wangni(0, 2, _wn3), (3, 41), fixed_d=0)
_reg("WANGNI_4", 2, "d = 1, q^k sum", None, _wangni(1, 1, _wn4), (3, 41), fixed_d=1)
_reg("GU_GUO", 2, "d = 1, q^k sum (same statement as WANGNI_4)", None, _wangni(1, 1, _wn4), (3, 41), fixed_d=1)
_reg("LEM_POCH", 2, "(q^(2d+1);q^2)_n / (q;q)_(n-1)", "d", _lem_poch, (3, 41))
_reg("LEM_PSI", 1, "the alternating sum Psi_{n,d}", "d", _lem_psi, (3, 41))
_reg("QMORLEY_FULL", 3, "q-Morley congruence, cube modulus", None, _qmorley_full, (3, 41))
_reg("QMORLEY_SQ", 2, "q-Morley congruence, square modulus", None, _qmorley_sq, (3, 41))
_reg("GUO_BINOM", 2, "[2n-1, n-1] against a signed q-power", None, _guo_binom, (3, 41))
_reg("LIU_SQ", 2, "1 - q^2n against 2(1 - q^n)", None, _liu_sq, (3, 41))


def congruence_ids() -> list:
    return list(CONGRUENCES)


def get_congruence(ident: str) -> CongruenceSpec:
    try:
        return CONGRUENCES[ident]
    except KeyError:
        raise UnknownId(ident) from None


@dataclass(frozen=True)
class CongruenceCase:
    id: str
    n: int
    params: dict = field(default_factory=dict)
    r: int | None = None  # overrides the statement's ring power (weaker checks)

    def param(self):
        spec = get_congruence(self.id)
        if spec.param is None:
            return None
        if spec.param not in self.params:
            from .errors import ParamMissing

            raise ParamMissing(f"{self.id} needs {spec.param}")
        return self.params[spec.param]


def param_values(ident: str, n: int) -> list:
    return get_congruence(ident).param_values(n)


def _check_range(spec: CongruenceSpec, n: int, value):
    if n < 3 or n % 2 == 0:
        raise ParamOutOfRange(f"{spec.id}: n must be odd and >= 3, got {n}")
    if spec.param == "m" and not 1 <= value <= (n + 1) // 2:
        raise ParamOutOfRange(f"{spec.id}: need 1 <= m <= {(n + 1) // 2}, got m={value}")
    if spec.param == "d" and abs(value) > (n - 3) // 2:
        raise ParamOutOfRange(f"{spec.id}: need |d| <= {(n - 3) // 2}, got d={value}")


def sides(ident: str, n: int, value=None, r: int | None = None, route: str = "residue"):
    """(lhs, rhs) in the chosen algebra."""
    spec = get_congruence(ident)
    _check_range(spec, n, value)
    M = make_modulus(n, spec.r if r is None else r)
    A = ResidueAlgebra(M) if route == "residue" else SymbolicAlgebra(M)
    return spec.build(A, n, value), A


def verify_congruence(case: CongruenceCase, route: str = "residue") -> CheckReport:
    """Pass iff LHS - RHS reduces to zero in Q[q]/Phi_n^r."""
    spec = get_congruence(case.id)
    value = case.param()
    params = {"n": case.n, **({spec.param: value} if spec.param else {})}
    if case.r is not None:
        params["r"] = case.r
    t0 = time.perf_counter()
    (lhs, rhs), A = sides(case.id, case.n, value, case.r, route)
    diff = A.residue(lhs - rhs)
    elapsed = int((time.perf_counter() - t0) * 1e6)
    if diff.is_zero():
        return CheckReport(case.id, params, PASS, "", elapsed)
    return CheckReport(case.id, params, FAIL, f"residue of LHS - RHS: {diff}", elapsed)


def psi_sum(n: int, d: int, M: Modulus) -> Residue:
    """Residue of Psi_{n,d} = sum_{|k| <= (n-1)/2, k != d} (-1)^k q^(2dk-k) / (1 - q^(2d-2k))."""
    if n < 3 or n % 2 == 0 or abs(d) > (n - 3) // 2:
        raise ParamOutOfRange(f"psi_sum needs odd n >= 3 and |d| <= (n-3)/2, got n={n}, d={d}")
    return _psi(ResidueAlgebra(M), n, d)


def lhs_is_even(ident: str, n: int, value) -> bool:
    """S(q) == S(-q) for the exact left-hand side."""
    (lhs, _), _ = sides(ident, n, value, route="symbolic")
    return lhs == lhs.subs_monomial(1, -1)


_CHAIN = (
    (-1, "COR_D_QK", "WANGYU_QK", "WANGNI_1"),
    (-1, "COR_D_Q2K", "WANGYU_Q2K", "WANGNI_2"),
    (0, "COR_D_Q2K", "WANGYU_Q2K", "WANGNI_3"),
    (1, "COR_D_QK", "WANGYU_QK", "WANGNI_4"),
    (1, "COR_D_QK", "WANGYU_QK", "GU_GUO"),
)


def consistency_chain(n: int) -> list:
    """For d in {-1, 0, 1}: do the general and explicit right sides agree mod Phi_n^2?

    Returns (d, ids, agree) triples; d values outside the range for n are skipped.
    """
    out = []
    for d, general, wangyu, explicit in _CHAIN:
        if abs(d) > (n - 3) // 2:
            continue
        (l1, r1), _ = sides(general, n, d)
        (l2, r2), _ = sides(wangyu, n, d)
        (l3, r3), _ = sides(explicit, n)
        agree = l1 == l2 == l3 and r1 == r2 == r3
        out.append((d, (general, wangyu, explicit), agree))
    return out


# -- prime corollaries -------------------------------------------------------------


def odd_primes(limit: int) -> list:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [p for p in range(3, limit + 1) if sieve[p]]


def _vp(x: int, p: int) -> tuple:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v, x


def rise_sum_mod(d: int, upper: int, p: int, N: int) -> int:
    """sum_{k=0}^{upper} prod_{j<k}(2d+2j+1) / k!  mod p^N, by p-adic tracking.

    Each term is kept as p^v * u with u a unit mod p^N; the ratio between
    consecutive terms is (2d+2k+1)/(k+1).
    """
    mod = p**N
    v, u = 0, 1
    total = 0
    for k in range(upper + 1):
        if k:
            a, ua = _vp(2 * d + 2 * k - 1, p)
            b, ub = _vp(k, p)
            v += a - b
            u = u * ua * pow(ub, -1, mod) % mod
        if v < 0:
            raise NotCoprime(f"term {k} has p-adic valuation {v} < 0")
        if v < N:
            total = (total + p**v * u) % mod
    return total


def rise_sums_mod(ds, upper: int, p: int, N: int) -> np.ndarray:
    """Vectorized rise_sum_mod over a run of consecutive d values.

    For step k the numerators 2d + 2k - 1 form a contiguous run of odd
    integers, so their valuations and units are tabulated once and sliced.
    """
    ds = np.asarray(ds, dtype=np.int64)
    if len(ds) == 0:
        return ds
    if len(ds) > 1 and not (np.diff(ds) == 1).all():
        return np.array([rise_sum_mod(int(d), upper, p, N) for d in ds], dtype=np.int64)
    mod = p**N
    lo = int(ds[0])
    # odd numbers 2*lo + 1, 2*lo + 3, ... covering every numerator used
    count = len(ds) + upper
    odd = 2 * lo + 1 + 2 * np.arange(count, dtype=np.int64)
    val = np.zeros(count, dtype=np.int64)
    unit = odd.copy()
    while True:
        hit = unit % p == 0
        if not hit.any():
            break
        val += hit
        unit = np.where(hit, unit // p, unit)
    unit %= mod
    pw = np.array([p**i for i in range(N)] + [0], dtype=np.int64)
    v = np.zeros(len(ds), dtype=np.int64)
    u = np.ones(len(ds), dtype=np.int64)
    total = np.ones(len(ds), dtype=np.int64) % mod
    for k in range(1, upper + 1):
        b, ub = _vp(k, p)
        sl = slice(k - 1, k - 1 + len(ds))
        v += val[sl] - b
        u = u * unit[sl] % mod * pow(ub, -1, mod) % mod
        if b and (v < 0).any():
            raise NotCoprime(f"term {k} has negative p-adic valuation")
        total = (total + pw[np.minimum(v, N)] * u) % mod
    return total


def rise_sum_exact(d: int, upper: int) -> Fraction:
    """The same sum with exact rationals (oracle for small cases)."""
    term = Fraction(1)
    total = Fraction(0)
    for k in range(upper + 1):
        if k:
            term = term * (2 * d + 2 * k - 1) / k
        total += term
    return total


def _frac_mod(x: Fraction, mod: int, p: int) -> int:
    if x.denominator % p == 0:
        raise NotCoprime(f"{x} is not p-integral")
    return x.numerator * pow(x.denominator, -1, mod) % mod


def _rise_corrections(dmax: int, p: int, r: int, N: int) -> dict:
    """Sgn(d) sum_{j=1}^{|d|} 2 p^r (-1)^(j+d) / (2j-1) mod p^N for all |d| <= dmax.

    Shares one prefix sum over j; 2j - 1 < p^r keeps every term p-integral.
    """
    mod = p**N
    prefix = [0]
    for j in range(1, dmax + 1):
        v, w = _vp(2 * j - 1, p)
        if r - v < 0:
            raise NotCoprime(f"2j-1 = {2 * j - 1} has valuation above {r}")
        term = 2 * p ** (r - v) * pow(w, -1, mod) * _neg1(j)
        prefix.append((prefix[-1] + term) % mod)
    return {d: sgn(d) * _neg1(d) * prefix[abs(d)] % mod for d in range(-dmax, dmax + 1)}


def _rise_correction(d: int, p: int, r: int, N: int) -> int:
    return _rise_corrections(abs(d), p, r, N)[d]


@dataclass(frozen=True)
class PrimeSpec:
    id: str
    N: int  # modulus is p^N
    anchor: str
    param: str | None
    rs: tuple  # exponents r covered by default
    suite: str = "primes"

    def schema(self) -> str:
        return {
            "ST_MODP": "p odd prime, r >= 1",
            "SUN_MODP2": "p odd prime, r >= 1",
            "RISE_MODP": "p odd prime, 1 <= m <= (p+1)/2",
            "RISE_MODP2": "p odd prime, r >= 1, p^r > 2|d|+1",
        }[self.id]


PRIMES: dict[str, PrimeSpec] = {
    "ST_MODP": PrimeSpec("ST_MODP", 1, "sum C(2k,k)/2^k up to p^r - 1, mod p", None, (1, 2)),
    "SUN_MODP2": PrimeSpec("SUN_MODP2", 2, "sum C(2k,k)/2^k up to p^r - 1, mod p^2", None, (1, 2)),
    "RISE_MODP": PrimeSpec("RISE_MODP", 1, "sum 2^k (m-1/2)_k / k! up to p - m, mod p", "m", (1,)),
    "RISE_MODP2": PrimeSpec("RISE_MODP2", 2, "sum 2^k (d+1/2)_k / k! with Sgn(d) correction, mod p^2", "d", (1, 2)),
}


def prime_ids() -> list:
    return list(PRIMES)


def get_prime(ident: str) -> PrimeSpec:
    try:
        return PRIMES[ident]
    except KeyError:
        raise UnknownId(ident) from None


@dataclass(frozen=True)
class PrimeCase:
    id: str
    p: int
    r: int = 1
    param: int | None = None


def prime_params(ident: str, p: int, r: int) -> list:
    spec = get_prime(ident)
    if spec.param == "m":
        return list(range(1, (p + 1) // 2 + 1))
    if spec.param == "d":
        K = p**r
        b = (K - 2) // 2  # largest |d| with p^r > 2|d| + 1
        return list(range(-b, b + 1))
    return [None]


def _prime_target(ident: str, p: int, r: int, param, corrections: dict | None = None) -> tuple:
    """(d, upper, expected) with the sum being rise_sum(d, upper)."""
    spec = get_prime(ident)
    mod = p**spec.N
    if ident in ("ST_MODP", "SUN_MODP2"):
        K = p**r
        return 0, K - 1, _neg1((K - 1) // 2) % mod
    if ident == "RISE_MODP":
        m = param
        return m - 1, p - m, _neg1((p - 1) // 2 + m - 1) % mod
    d = param
    K = p**r
    corr = corrections[d] if corrections is not None else _rise_correction(d, p, r, spec.N)
    return d, K - 1, (_neg1((K - 1) // 2 + d) + corr) % mod


def _check_prime_case(case: PrimeCase):
    spec = get_prime(case.id)
    p, r = case.p, case.r
    if p < 3 or p % 2 == 0 or any(p % q == 0 for q in range(3, int(p**0.5) + 1, 2)):
        raise InvalidIndex(f"p must be an odd prime, got {p}")
    if r < 1:
        raise InvalidIndex(f"r must be >= 1, got {r}")
    if spec.param == "m":
        if case.param is None or not 1 <= case.param <= (p + 1) // 2:
            raise BoundViolation(f"{case.id}: need 1 <= m <= {(p + 1) // 2}, got m={case.param}")
        if r != 1:
            raise BoundViolation(f"{case.id} is stated for r = 1 only")
    if spec.param == "d":
        if case.param is None:
            raise BoundViolation(f"{case.id} needs d")
        if not p**r > 2 * abs(case.param) + 1:
            raise BoundViolation(f"{case.id}: need p^r > 2|d| + 1, got p^r={p**r}, d={case.param}")


def verify_prime_congruence(case: PrimeCase) -> CheckReport:
    _check_prime_case(case)
    spec = get_prime(case.id)
    t0 = time.perf_counter()
    d, upper, want = _prime_target(case.id, case.p, case.r, case.param)
    got = rise_sum_mod(d, upper, case.p, spec.N)
    params = {"p": case.p, "r": case.r}
    if spec.param:
        params[spec.param] = case.param
    elapsed = int((time.perf_counter() - t0) * 1e6)
    if got == want:
        return CheckReport(case.id, params, PASS, "", elapsed)
    return CheckReport(case.id, params, FAIL, f"sum = {got}, expected {want} mod {case.p}^{spec.N}", elapsed)


def prime_sweep(ident: str, p: int, r: int) -> list:
    """Reports for every valid parameter at (p, r), with the sums vectorized over d."""
    spec = get_prime(ident)
    values = prime_params(ident, p, r)
    if spec.param is None:
        return [verify_prime_congruence(PrimeCase(ident, p, r))]
    if ident == "RISE_MODP":
        return [verify_prime_congruence(PrimeCase(ident, p, r, m)) for m in values]
    t0 = time.perf_counter()
    mod = p**spec.N
    got = rise_sums_mod(values, p**r - 1, p, spec.N)
    corrections = _rise_corrections(max(abs(d) for d in values), p, r, spec.N)
    elapsed = int((time.perf_counter() - t0) * 1e6 / max(1, len(values)))
    out = []
    for d, g in zip(values, got.tolist()):
        want = _prime_target(ident, p, r, d, corrections)[2]
        params = {"p": p, "r": r, "d": d}
        if g == want:
            out.append(CheckReport(ident, params, PASS, "", elapsed))
        else:
            out.append(CheckReport(ident, params, FAIL, f"sum = {g}, expected {want} mod {p}^{spec.N}", elapsed))
    return out
