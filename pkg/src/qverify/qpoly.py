"""Exact Laurent polynomials and rational functions in one variable q.

Coefficients are ``flint.fmpq`` rationals.  ``LaurentPoly`` is a sparse
exponent -> coefficient map.  ``RationalFunction`` stores q**v * N / D with
N, D dense ``fmpq_poly`` values, D monic, N(0) != 0, D(0) != 0 and
gcd(N, D) = 1, so equal values have identical fields.
"""

from __future__ import annotations

import re
import threading
from fractions import Fraction
from types import MappingProxyType

from flint import fmpq, fmpq_poly, fmpz, fmpz_poly

from .errors import (
    BothZero,
    DivisionByZero,
    InvalidIndex,
    NotOrdinary,
    ParseError,
    ZeroBase,
    ZeroDivisor,
)

__all__ = [
    "Rational",
    "as_rational",
    "LaurentPoly",
    "RationalFunction",
    "Q",
    "ONE",
    "ZERO",
    "RF_ZERO",
    "RF_ONE",
    "laurent_arith",
    "ratfun_arith",
    "laurent_eval",
    "poly_divrem",
    "poly_gcd",
    "cyclotomic",
    "cyclotomic_coeffs",
    "as_ratfun",
    "render_poly",
    "parse_poly",
    "parse_ratfun",
]

Rational = fmpq
_SCALARS = (int, fmpz, fmpq, Fraction)


def as_rational(x) -> fmpq:
    """Coerce int, fmpz, fmpq, Fraction or ``"p/q"`` text to an exact rational."""
    if isinstance(x, fmpq):
        return x
    if isinstance(x, (int, fmpz)):
        return fmpq(x)
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    if isinstance(x, str):
        m = re.fullmatch(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?", x)
        if not m or (m.group(2) is not None and int(m.group(2)) == 0):
            raise ParseError(f"not a rational: {x!r}")
        return fmpq(int(m.group(1)), int(m.group(2) or 1))
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def _valuation(p: fmpq_poly) -> int:
    """Largest v with q**v dividing p (p nonzero)."""
    if p[0] != 0:
        return 0
    for i, c in enumerate(p.coeffs()):
        if c != 0:
            return i
    raise ValueError("zero polynomial has no valuation")


class LaurentPoly:
    """Finite sum of c * q**e with e any integer and c a nonzero rational."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = as_rational(c)
                if c != 0:
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        c = as_rational(c)
        return cls._raw({0: c} if c != 0 else {})

    @classmethod
    def monomial(cls, e: int, c=1) -> "LaurentPoly":
        c = as_rational(c)
        return cls._raw({int(e): c} if c != 0 else {})

    @classmethod
    def from_coeffs(cls, coeffs, lo: int = 0) -> "LaurentPoly":
        return cls({lo + i: c for i, c in enumerate(coeffs) if c})

    def to_flint(self):
        """(lo, P) with self == q**lo * P and P(0) != 0; (0, 0) for zero."""
        t = self._terms
        if not t:
            return 0, fmpq_poly()
        lo = min(t)
        coeffs = [0] * (max(t) - lo + 1)
        for e, c in t.items():
            coeffs[e - lo] = c
        return lo, fmpq_poly(coeffs)

    @classmethod
    def from_flint(cls, p: fmpq_poly, lo: int = 0) -> "LaurentPoly":
        return cls._raw({lo + i: c for i, c in enumerate(p.coeffs()) if c != 0})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def degree(self) -> int:
        return max(self._terms) if self._terms else -1

    def is_ordinary(self) -> bool:
        return not self._terms or min(self._terms) >= 0

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coeff(self, e: int) -> fmpq:
        return self._terms.get(e, fmpq(0))

    def leading(self) -> fmpq:
        return self._terms[max(self._terms)]

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, _SCALARS):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for e, c in b.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s != 0:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((f, d),) = b.items()
            return LaurentPoly._raw({e + f: c * d for e, c in a.items()})
        if len(a) * len(b) > 64:
            lo_a, pa = self.to_flint()
            lo_b, pb = other.to_flint()
            # dense product only pays off when the spans are not mostly gaps
            if pa.length() + pb.length() <= 8 * (len(a) + len(b)):
                return LaurentPoly.from_flint(pa * pb, lo_a + lo_b)
        out = {}
        for e, c in a.items():
            for f, d in b.items():
                k = e + f
                s = out.get(k)
                out[k] = c * d if s is None else s + c * d
        return LaurentPoly._raw({k: v for k, v in out.items() if v != 0})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise DivisionByZero("only monomials have Laurent inverses")
            ((e, c),) = self._terms.items()
            return LaurentPoly._raw({e * k: c**k})
        if len(self._terms) == 1:
            ((e, c),) = self._terms.items()
            return LaurentPoly._raw({e * k: c**k})
        if k == 0:
            return ONE
        lo, p = self.to_flint()
        return LaurentPoly.from_flint(p**k, lo * k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by q**e."""
        if not e:
            return self
        return LaurentPoly._raw({k + e: c for k, c in self._terms.items()})

    def scale(self, c) -> "LaurentPoly":
        c = as_rational(c)
        if c == 0:
            return ZERO
        return LaurentPoly._raw({k: v * c for k, v in self._terms.items()})

    def subs_monomial(self, k: int, c=1) -> "LaurentPoly":
        """Substitute q -> c * q**k."""
        c = as_rational(c)
        if k == 0:
            return LaurentPoly.const(self.evaluate(c))
        if c == 1:
            return LaurentPoly._raw({e * k: v for e, v in self._terms.items()})
        if c == 0:
            raise ZeroBase("substitution q -> 0")
        return LaurentPoly._raw({e * k: v * c**e for e, v in self._terms.items()})

    def evaluate(self, q0) -> fmpq:
        q0 = as_rational(q0)
        if not self._terms:
            return fmpq(0)
        if q0 == 0:
            if min(self._terms) < 0:
                raise ZeroBase("negative power of q evaluated at q = 0")
            return self._terms.get(0, fmpq(0))
        total = fmpq(0)
        for e, c in self._terms.items():
            total += c * q0**e
        return total

    def __call__(self, q0):
        return self.evaluate(q0)

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"LaurentPoly({render_poly(self)!r})"


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: fmpq(1)})
Q = LaurentPoly._raw({1: fmpq(1)})


def laurent_arith(a: LaurentPoly, b: LaurentPoly, kind: str) -> LaurentPoly:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "neg":
        return -a
    raise ValueError(f"unknown kind {kind!r}")


def laurent_eval(p: LaurentPoly, q0) -> fmpq:
    return p.evaluate(q0)


# -- ordinary polynomial algorithms ------------------------------------------


def _require_ordinary(*polys):
    for p in polys:
        if not p.is_ordinary():
            raise NotOrdinary(f"{p} has negative exponents")


def _ordinary_flint(p: LaurentPoly) -> fmpq_poly:
    lo, f = p.to_flint()
    return f.left_shift(lo) if lo else f


def poly_divrem(a: LaurentPoly, b: LaurentPoly):
    """Euclidean division of ordinary polynomials over the rationals."""
    _require_ordinary(a, b)
    if not b:
        raise ZeroDivisor("division by the zero polynomial")
    quo, rem = divmod(_ordinary_flint(a), _ordinary_flint(b))
    return LaurentPoly.from_flint(quo), LaurentPoly.from_flint(rem)


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two ordinary polynomials."""
    _require_ordinary(a, b)
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    return LaurentPoly.from_flint(_ordinary_flint(a).gcd(_ordinary_flint(b)))


# -- cyclotomic polynomials --------------------------------------------------

_cyclo_memo: dict[int, fmpz_poly] = {1: fmpz_poly([-1, 1])}
_cyclo_lock = threading.Lock()


def _cyclotomic_flint(n: int) -> fmpz_poly:
    hit = _cyclo_memo.get(n)
    if hit is not None:
        return hit
    # q^n - 1 divided by Phi_d for every proper divisor d
    rem = fmpz_poly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n // 2 + 1):
        if n % d == 0:
            rem, r = divmod(rem, _cyclotomic_flint(d))
            if not r.is_zero():
                raise ArithmeticError(f"cyclotomic recursion left a remainder at n={n}")
    with _cyclo_lock:
        return _cyclo_memo.setdefault(n, rem)


def cyclotomic_coeffs(n: int) -> tuple:
    """Integer coefficients (low degree first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise InvalidIndex(f"cyclotomic index must be >= 1, got {n}")
    return tuple(int(c) for c in _cyclotomic_flint(n).coeffs())


def cyclotomic(n: int) -> LaurentPoly:
    if n < 1:
        raise InvalidIndex(f"cyclotomic index must be >= 1, got {n}")
    return LaurentPoly.from_flint(fmpq_poly(_cyclotomic_flint(n)))


# -- rational functions --------------------------------------------------------

_P_ONE = fmpq_poly([1])
_P_ZERO = fmpq_poly()


class RationalFunction:
    """Canonical q**v * N / D in the field of rational functions of q."""

    __slots__ = ("_v", "_n", "_d", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, RationalFunction) or isinstance(den, RationalFunction):
            x = as_ratfun(num) / as_ratfun(den)
        else:
            num = _as_laurent(num)
            den = _as_laurent(den)
            if not den:
                raise DivisionByZero("zero denominator")
            lo_n, n = num.to_flint()
            lo_d, d = den.to_flint()
            x = _canonical(lo_n - lo_d, n, d)
        self._v, self._n, self._d, self._hash = x._v, x._n, x._d, None

    @classmethod
    def _raw(cls, v, n, d):
        obj = object.__new__(cls)
        obj._v = v
        obj._n = n
        obj._d = d
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "RationalFunction":
        c = as_rational(c)
        if c == 0:
            return RF_ZERO
        return cls._raw(0, fmpq_poly([c]), _P_ONE)

    @classmethod
    def qpow(cls, e: int, c=1) -> "RationalFunction":
        """c * q**e."""
        c = as_rational(c)
        if c == 0:
            return RF_ZERO
        return cls._raw(int(e), fmpq_poly([c]), _P_ONE)

    @classmethod
    def one_minus(cls, c, e: int) -> "RationalFunction":
        """1 - c * q**e, the factor shape of every Pochhammer symbol."""
        c = as_rational(c)
        if c == 0:
            return RF_ONE
        if e == 0:
            return cls.const(1 - c)
        if e > 0:
            coeffs = [0] * (e + 1)
            coeffs[0] = 1
            coeffs[e] = -c
            return cls._raw(0, fmpq_poly(coeffs), _P_ONE)
        coeffs = [0] * (1 - e)
        coeffs[0] = -c
        coeffs[-e] = 1
        return cls._raw(e, fmpq_poly(coeffs), _P_ONE)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "RationalFunction":
        lo, n = p.to_flint()
        return cls._raw(lo, n, _P_ONE)

    # -- views ---------------------------------------------------------------

    @property
    def num(self) -> LaurentPoly:
        return LaurentPoly.from_flint(self._n, self._v)

    @property
    def den(self) -> LaurentPoly:
        return LaurentPoly.from_flint(self._d)

    def flint_parts(self):
        """(v, N, D) with self == q**v * N / D in canonical form."""
        return self._v, self._n, self._d

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def __bool__(self):
        return not self._n.is_zero()

    def is_laurent(self) -> bool:
        return self._d.is_one()

    def as_laurent(self) -> LaurentPoly:
        if not self._d.is_one():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    # -- arithmetic ------------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction.from_laurent(other)
        if isinstance(other, _SCALARS):
            return RationalFunction.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other._n.is_zero():
            return self
        if self._n.is_zero():
            return other
        v = min(self._v, other._v)
        a = self._n.left_shift(self._v - v) if self._v > v else self._n
        c = other._n.left_shift(other._v - v) if other._v > v else other._n
        b, d = self._d, other._d
        if b == d:
            num = a + c
            if b.is_one() or num.is_zero():
                return _strip(v, num, _P_ONE)
            g = num.gcd(b)
            if not g.is_one():
                return _strip(v, num / g, b / g)
            return _strip(v, num, b)
        if b.is_one():
            return _strip(v, a * d + c, d)
        if d.is_one():
            return _strip(v, a + c * b, b)
        g = b.gcd(d)
        if g.is_one():
            # coprime reduced denominators: the sum is already reduced
            return _strip(v, a * d + c * b, b * d)
        b1 = b / g
        d1 = d / g
        num = a * d1 + c * b1
        if num.is_zero():
            return RF_ZERO
        g2 = num.gcd(g)
        if not g2.is_one():
            return _strip(v, num / g2, b1 * (d / g2))
        return _strip(v, num, b * d1)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(self._v, -self._n, self._d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._n.is_zero() or other._n.is_zero():
            return RF_ZERO
        a, b = self._n, self._d
        c, d = other._n, other._d
        v = self._v + other._v
        if b.is_one() and d.is_one():
            return RationalFunction._raw(v, a * c, _P_ONE)
        # cross-cancel: the inputs are already reduced
        if not d.is_one() and a.degree() > 0:
            g = a.gcd(d)
            if not g.is_one():
                a = a / g
                d = d / g
        if not b.is_one() and c.degree() > 0:
            g = c.gcd(b)
            if not g.is_one():
                c = c / g
                b = b / g
        return RationalFunction._raw(v, a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self._n.is_zero():
            raise DivisionByZero("inverse of the zero rational function")
        n, d = self._d, self._n
        lead = d.leading_coefficient()
        if lead != 1:
            n = n / lead
            d = d / lead
        return RationalFunction._raw(-self._v, n, d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return RF_ONE
        return RationalFunction._raw(self._v * k, self._n**k, self._d**k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._v == other._v and self._n == other._n and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._v, tuple(self._n.coeffs()), tuple(self._d.coeffs())))
        return self._hash

    def subs_monomial(self, k: int, c=1) -> "RationalFunction":
        """Substitute q -> c * q**k (k != 0)."""
        if k == 0:
            raise ValueError("use evaluate() for q -> constant")
        return RationalFunction(self.num.subs_monomial(k, c), self.den.subs_monomial(k, c))

    def evaluate(self, q0) -> fmpq:
        q0 = as_rational(q0)
        d = self._d(q0)
        if d == 0:
            raise DivisionByZero(f"denominator vanishes at q = {q0}")
        if q0 == 0:
            if self._v < 0:
                raise ZeroBase("negative power of q evaluated at q = 0")
            return self._n(q0) / d if self._v == 0 else fmpq(0)
        return self._n(q0) * q0**self._v / d

    def __str__(self):
        if self._d.is_one():
            return render_poly(self.num)
        return f"({render_poly(self.num)})/({render_poly(self.den)})"

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"


def _strip(v, n: fmpq_poly, d: fmpq_poly) -> RationalFunction:
    """Move powers of q out of n; d is already monic with d(0) != 0."""
    if n.is_zero():
        return RF_ZERO
    s = _valuation(n)
    if s:
        n = n.right_shift(s)
    return RationalFunction._raw(v + s, n, d)


def _canonical(v, n: fmpq_poly, d: fmpq_poly) -> RationalFunction:
    if d.is_zero():
        raise DivisionByZero("zero denominator")
    if n.is_zero():
        return RF_ZERO
    g = n.gcd(d)
    if not g.is_one():
        n = n / g
        d = d / g
    s = _valuation(n)
    t = _valuation(d)
    lead = d.leading_coefficient()
    return RationalFunction._raw(v + s - t, n.right_shift(s) / lead, d.right_shift(t) / lead)


def _as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, str):
        return parse_poly(x)
    return LaurentPoly.const(x)


RF_ZERO = RationalFunction._raw(0, _P_ZERO, _P_ONE)
RF_ONE = RationalFunction._raw(0, _P_ONE, _P_ONE)


def as_ratfun(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, LaurentPoly):
        return RationalFunction.from_laurent(x)
    if isinstance(x, str):
        return parse_ratfun(x)
    return RationalFunction.const(x)


def ratfun_arith(a: RationalFunction, b: RationalFunction, kind: str) -> RationalFunction:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        if not b:
            raise DivisionByZero("division by the zero rational function")
        return a / b
    raise ValueError(f"unknown kind {kind!r}")


# -- text form -----------------------------------------------------------------


def render_poly(p: LaurentPoly) -> str:
    """Render like ``q^2 - q + 1``; exponents descend, rationals as ``3/2*q``."""
    if not p:
        return "0"
    parts = []
    for e in sorted(p._terms, reverse=True):
        c = p._terms[e]
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "q" if e == 1 else f"q^{e}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?
        (?P<var>q(?:\s*\^\s*(?:\((?P<pexp>-?\d+)\)|(?P<exp>-?\d+)))?)?
        \s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> LaurentPoly:
    """Parse the grammar produced by ``render_poly``."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    terms: dict[int, fmpq] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected text at {pos} in {text!r}")
        if not first and m.group("sign") is None:
            raise ParseError(f"missing operator at {pos} in {text!r}")
        coef, var = m.group("coef"), m.group("var")
        if coef is None and var is None:
            raise ParseError(f"dangling sign at {pos} in {text!r}")
        if m.group("star") and var is None:
            raise ParseError(f"dangling '*' at {pos} in {text!r}")
        c = as_rational(coef) if coef else fmpq(1)
        if m.group("sign") == "-":
            c = -c
        if var is None:
            e = 0
        else:
            raw = m.group("pexp") or m.group("exp")
            e = int(raw) if raw is not None else 1
        terms[e] = terms.get(e, fmpq(0)) + c
        pos = m.end()
        first = False
    return LaurentPoly(terms)


def parse_ratfun(text: str) -> RationalFunction:
    s = text.strip()
    m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", s)
    if m:
        return RationalFunction(parse_poly(m.group(1)), parse_poly(m.group(2)))
    return RationalFunction(parse_poly(s))
