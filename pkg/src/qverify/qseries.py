"""q-Pochhammer symbols, q-binomials, Hahn polynomials and friends.

Bases are RationalFunctions (or anything ``as_ratfun`` accepts).  A base of
the form c * q**e takes a fast path, since every factor is then 1 - c q^j.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from flint import fmpq, fmpq_poly

from .errors import InvalidIndex, SingularFactor, SingularLowerParameter
from .qpoly import RF_ONE, RF_ZERO, LaurentPoly, RationalFunction, as_ratfun

__all__ = [
    "PochhammerSpec",
    "poch",
    "poch_spec",
    "poch_multi",
    "poch_table",
    "q_binomial",
    "q_binomial_rf",
    "q_integer",
    "hahn",
    "phi32",
    "pfall",
    "central_rise",
]


@dataclass(frozen=True)
class PochhammerSpec:
    base: RationalFunction
    step: int = 1
    length: int = 0

    def __post_init__(self):
        if self.step < 1:
            raise InvalidIndex(f"Pochhammer step must be >= 1, got {self.step}")


def _monomial(a: RationalFunction):
    """(c, e) when a == c * q**e, else None."""
    v, n, d = a.flint_parts()
    if d.is_one() and n.length() == 1:
        return n[0], v
    return None


def _factor(a: RationalFunction, mono, e: int) -> RationalFunction:
    """1 - a * q**e."""
    if mono is not None:
        return RationalFunction.one_minus(mono[0], mono[1] + e)
    return RF_ONE - a * RationalFunction.qpow(e)


def poch(a, n: int, s: int = 1) -> RationalFunction:
    """(a; q^s)_n for any integer n."""
    if s < 1:
        raise InvalidIndex(f"Pochhammer step must be >= 1, got {s}")
    a = as_ratfun(a)
    mono = _monomial(a)
    if n >= 0:
        out = RF_ONE
        for k in range(n):
            out = out * _factor(a, mono, s * k)
        return out
    out = RF_ONE
    for k in range(1, -n + 1):
        f = _factor(a, mono, -s * k)
        if not f:
            raise SingularFactor(f"factor 1 - a*q^{-s * k} vanishes in (a;q^{s})_{n}")
        out = out * f
    return out.inverse()


def poch_spec(spec: PochhammerSpec) -> RationalFunction:
    return poch(spec.base, spec.length, spec.step)


def poch_multi(bases, n: int, s: int = 1) -> RationalFunction:
    """(a1, a2, ...; q^s)_n."""
    out = RF_ONE
    for a in bases:
        out = out * poch(a, n, s)
    return out


def poch_table(a, n: int, s: int = 1) -> list:
    """[(a; q^s)_0, ..., (a; q^s)_n] by running product."""
    a = as_ratfun(a)
    mono = _monomial(a)
    out = [RF_ONE]
    for k in range(n):
        out.append(out[-1] * _factor(a, mono, s * k))
    return out


@lru_cache(maxsize=4096)
def _qbinom_flint(n: int, k: int) -> fmpq_poly:
    if k == 0 or k == n:
        return fmpq_poly([1])
    k = min(k, n - k)
    # prod (1 - q^{n-k+i}) / (1 - q^i), i = 1..k; each step divides exactly
    out = fmpq_poly([1])
    for i in range(1, k + 1):
        top = [0] * (n - k + i + 1)
        top[0], top[-1] = 1, -1
        bot = [0] * (i + 1)
        bot[0], bot[-1] = 1, -1
        out = out * fmpq_poly(top) / fmpq_poly(bot)
    return out


def q_binomial(n: int, k: int, s: int = 1) -> LaurentPoly:
    """Gaussian binomial [n, k] in base q^s; zero outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return LaurentPoly._raw({})
    p = _qbinom_flint(n, k)
    if s == 1:
        return LaurentPoly.from_flint(p)
    return LaurentPoly._raw({s * i: c for i, c in enumerate(p.coeffs()) if c != 0})


@lru_cache(maxsize=4096)
def q_binomial_rf(n: int, k: int, s: int = 1) -> RationalFunction:
    return RationalFunction.from_laurent(q_binomial(n, k, s))


def q_integer(n: int) -> LaurentPoly:
    """[n] = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise InvalidIndex(f"q-integer needs n >= 0, got {n}")
    return LaurentPoly._raw({i: fmpq(1) for i in range(n)})


def hahn(n: int, b, x) -> RationalFunction:
    """Hahn polynomial sum_k [n,k] (b;q)_k x^k."""
    if n < 0:
        raise InvalidIndex(f"Hahn polynomial needs n >= 0, got {n}")
    b = as_ratfun(b)
    x = as_ratfun(x)
    bk = poch_table(b, n)
    total = RF_ZERO
    xk = RF_ONE
    for k in range(n + 1):
        total = total + q_binomial_rf(n, k) * bk[k] * xk
        xk = xk * x
    return total


def phi32(a1, a2, k: int, b2) -> RationalFunction:
    """Terminating 3phi2 with upper (a1, a2, q^-k), lower (0, b2), argument q."""
    if k < 0:
        raise InvalidIndex(f"terminating index must be >= 0, got {k}")
    a1 = as_ratfun(a1)
    a2 = as_ratfun(a2)
    b2 = as_ratfun(b2)
    m1, m2, mb = _monomial(a1), _monomial(a2), _monomial(b2)
    term = RF_ONE
    total = RF_ONE
    for i in range(k):
        lower = _factor(b2, mb, i)
        if not lower:
            raise SingularLowerParameter(f"(b2;q)_{i + 1} vanishes: b2 = q^{-i}")
        # term_{i+1} / term_i
        ratio = (
            _factor(a1, m1, i)
            * _factor(a2, m2, i)
            * RationalFunction.one_minus(1, i - k)
            * RationalFunction.qpow(1)
            / (RationalFunction.one_minus(1, i + 1) * lower)
        )
        term = term * ratio
        total = total + term
    return total


def pfall(x, y, k: int) -> RationalFunction:
    """P_k(x, y) = (x - y)(x - yq)...(x - yq^(k-1))."""
    if k < 0:
        raise InvalidIndex(f"P_k needs k >= 0, got {k}")
    x = as_ratfun(x)
    y = as_ratfun(y)
    out = RF_ONE
    for j in range(k):
        out = out * (x - y * RationalFunction.qpow(j))
    return out


def central_rise(d: int, k: int) -> int:
    """2^k (d + 1/2)_k = prod_{j<k} (2d + 2j + 1)."""
    if k < 0:
        raise InvalidIndex(f"rising length must be >= 0, got {k}")
    out = 1
    for j in range(k):
        out *= 2 * d + 2 * j + 1
    return out
