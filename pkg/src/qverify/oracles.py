"""Structural checks on the building blocks: cyclotomics, q-binomials, Pochhammers, operators.

These run as the ``oracles`` suite.  Each check is exact and independent of
the identity and congruence registries.
"""

from __future__ import annotations

import time
from math import comb
from typing import Callable

from flint import fmpq

from .operators import carlitz_closed_form, carlitz_power, delta_closed_form, delta_power
from .qpoly import LaurentPoly, RationalFunction, cyclotomic, laurent_eval
from .qseries import poch, q_binomial
from .report import FAIL, PASS, CheckReport
from .sampling import SplitMix64, case_seed, draw_rational

__all__ = ["ORACLES", "oracle_ids", "oracle_params", "run_oracle"]


def _qp(e: int, c=1) -> RationalFunction:
    return RationalFunction.qpow(e, c)


def _cyclo_product(n: int, seed: int):
    prod = LaurentPoly.const(1)
    for d in range(1, n + 1):
        if n % d == 0:
            prod = prod * cyclotomic(d)
    return prod, LaurentPoly({n: 1, 0: -1})


def _cyclo_square(n: int, seed: int):
    phi = cyclotomic(n)
    return phi.subs_monomial(2), phi * phi.subs_monomial(1, -1)


def _pascal(n: int, seed: int):
    lhs, rhs = [], []
    for k in range(n + 2):
        lhs.append(q_binomial(n + 1, k))
        rhs.append(q_binomial(n, k).shift(k) + q_binomial(n, k - 1))
    return lhs, rhs


def _binomial_theorem(m: int, seed: int):
    z = draw_rational(SplitMix64(case_seed(seed, "QBINOM_THEOREM", m)))
    rhs = RationalFunction.const(0)
    for k in range(m + 1):
        rhs = rhs + RationalFunction.from_laurent(q_binomial(m, k)) * _qp(k * (k - 1) // 2, (-z) ** k)
    return poch(z, m), rhs


def _poch_split(n: int, seed: int):
    """(a;q^s)_(m+j) = (a;q^s)_m (a q^(s m); q^s)_j over m, j in [-5, 5]."""
    rng = SplitMix64(case_seed(seed, "POCH_SPLIT", n))
    a = draw_rational(rng)
    s = 1 + rng.next() % 2
    lhs, rhs = [], []
    for m in range(-5, 6):
        for j in range(-5, 6):
            lhs.append(poch(a, m + j, s))
            rhs.append(poch(a, m, s) * poch(_qp(s * m, a), j, s))
    return lhs, rhs


def _reindex(n: int, seed: int):
    lhs, rhs = [], []
    for k in range((n - 1) // 2 + 1):
        lhs.append(poch(_qp(n - 2 * k + 1), k, 2))
        rhs.append(_qp(k * (n - k), (-1) ** k) * poch(_qp(1 - n), k, 2))
    return lhs, rhs


def _shift(n: int, seed: int):
    """poch(q^(-2k-2m+2), m-1; q^2) against (q^2;q^2)_(m+k-1)/(q^2;q^2)_k, k, m <= n."""
    lhs, rhs = [], []
    for k in range(n + 1):
        for m in range(1, n + 1):
            lhs.append(poch(_qp(-2 * k - 2 * m + 2), m - 1, 2))
            rhs.append(
                _qp(-(m - 1) * (2 * k + m), (-1) ** (m - 1)) * poch(_qp(2), m + k - 1, 2) / poch(_qp(2), k, 2)
            )
    return lhs, rhs


def _limit(n: int, seed: int):
    return [laurent_eval(q_binomial(n, k), 1) for k in range(n + 1)], [fmpq(comb(n, k)) for k in range(n + 1)]


def _delta(n: int, seed: int):
    return delta_power(n), delta_closed_form(n)


def _carlitz_op(n: int, seed: int):
    return carlitz_power(n), carlitz_closed_form(n)


# id -> (description, default parameter values, check)
ORACLES: dict[str, tuple[str, Callable[[], list], Callable]] = {
    "CYCLO_PRODUCT": ("product of Phi_d over d | n equals q^n - 1", lambda: list(range(1, 201)), _cyclo_product),
    "CYCLO_SQUARE": ("Phi_n(q^2) = Phi_n(q) Phi_n(-q), n odd", lambda: list(range(3, 100, 2)), _cyclo_square),
    "Q_PASCAL": ("[n+1,k] = q^k [n,k] + [n,k-1]", lambda: list(range(0, 20)), _pascal),
    "QBINOM_THEOREM": ("(z;q)_m as a q-binomial sum", lambda: list(range(0, 16)), _binomial_theorem),
    "POCH_SPLIT": ("signed-index splitting of (a;q^s)_(m+n)", lambda: list(range(0, 5)), _poch_split),
    "REINDEX": ("(q^(n-2k+1);q^2)_k against (q^(1-n);q^2)_k, n odd", lambda: list(range(1, 22, 2)), _reindex),
    "SHIFT": ("(q^(-2k-2m+2);q^2)_(m-1) against a ratio of (q^2;q^2)", lambda: list(range(1, 7)), _shift),
    "QBINOM_LIMIT": ("[n,k] at q = 1 is C(n,k)", lambda: list(range(0, 13)), _limit),
    "DELTA_CLOSED": ("Delta_a^k as a q-binomial sum of eta_a powers", lambda: list(range(0, 9)), _delta),
    "CARLITZ_POWER": ("(eta_a eta_b - b eta_b)^n expanded by the q-binomial theorem", lambda: list(range(0, 9)), _carlitz_op),
}


def oracle_ids() -> list:
    return list(ORACLES)


def oracle_params(ident: str) -> list:
    return ORACLES[ident][1]()


def run_oracle(ident: str, n: int, seed: int = 0) -> CheckReport:
    if ident not in ORACLES:
        from .errors import UnknownId

        raise UnknownId(ident)
    t0 = time.perf_counter()
    lhs, rhs = ORACLES[ident][2](n, seed)
    elapsed = int((time.perf_counter() - t0) * 1e6)
    if lhs == rhs:
        return CheckReport(ident, {"n": n}, PASS, "", elapsed)
    return CheckReport(ident, {"n": n}, FAIL, "sides differ", elapsed)
