"""The quotient ring Q[q] / Phi_n(q)^r.

Residues are canonical remainders.  q is a unit because Phi_n(0) = 1 for
n >= 2, so Laurent input reduces through a cached inverse of q.
"""

from __future__ import annotations

import threading

from flint import fmpq, fmpq_poly

from .errors import InvalidIndex, ModulusMismatch, NotInvertible
from .qpoly import (
    LaurentPoly,
    RationalFunction,
    _cyclotomic_flint,
    as_rational,
    as_ratfun,
    render_poly,
)

__all__ = [
    "Modulus",
    "Residue",
    "make_modulus",
    "reduce",
    "residue_inverse",
    "residue_is_zero",
]


class Modulus:
    """Phi_n(q)^r with per-modulus caches of q-powers and inverses."""

    __slots__ = ("n", "r", "_m", "_phi", "_lock", "_qpows", "_inv_cache")

    def __init__(self, n: int, r: int):
        if n < 2:
            raise InvalidIndex(f"modulus index must be >= 2, got {n}")
        if r < 1:
            raise InvalidIndex(f"modulus exponent must be >= 1, got {r}")
        self.n = n
        self.r = r
        self._phi = fmpq_poly(_cyclotomic_flint(n))
        self._m = self._phi**r
        self._lock = threading.Lock()
        self._qpows: dict[int, fmpq_poly] = {0: fmpq_poly([1])}
        self._inv_cache: dict[tuple, fmpq_poly] = {}

    @property
    def poly(self) -> LaurentPoly:
        return LaurentPoly.from_flint(self._m)

    @property
    def degree(self) -> int:
        return self._m.degree()

    def __eq__(self, other):
        return isinstance(other, Modulus) and (self.n, self.r) == (other.n, other.r)

    def __hash__(self):
        return hash((self.n, self.r))

    def __repr__(self):
        return f"Modulus(n={self.n}, r={self.r})"

    # -- raw helpers on reduced fmpq_poly values -------------------------------

    def rem(self, p: fmpq_poly) -> fmpq_poly:
        if p.degree() < self._m.degree():
            return p
        return p % self._m

    def mul(self, a: fmpq_poly, b: fmpq_poly) -> fmpq_poly:
        return self.rem(a * b)

    def invert(self, a: fmpq_poly) -> fmpq_poly:
        if a.is_zero():
            raise NotInvertible(f"zero is not invertible mod Phi_{self.n}^{self.r}")
        g, s, _ = a.xgcd(self._m)
        if not g.is_one():
            raise NotInvertible(f"{a} shares a factor with Phi_{self.n}")
        return s

    def qpow(self, e: int) -> fmpq_poly:
        """q**e mod M for any integer e."""
        hit = self._qpows.get(e)
        if hit is not None:
            return hit
        if e > 0:
            val = self.rem(fmpq_poly([0, 1]).left_shift(e - 1))
        else:
            qinv = self._qpows.get(-1)
            if qinv is None:
                qinv = self.invert(fmpq_poly([0, 1]))
                with self._lock:
                    self._qpows[-1] = qinv
            val = fmpq_poly([1])
            base, k = qinv, -e
            while k:
                if k & 1:
                    val = self.mul(val, base)
                k >>= 1
                if k:
                    base = self.mul(base, base)
        with self._lock:
            if len(self._qpows) < 8192:
                self._qpows[e] = val
        return val

    def one_minus(self, c, e: int) -> fmpq_poly:
        """1 - c q^e mod M."""
        return fmpq_poly([1]) - self.qpow(e) * as_rational(c)

    def inv_one_minus(self, c, e: int) -> fmpq_poly:
        key = (c, e)
        hit = self._inv_cache.get(key)
        if hit is None:
            hit = self.invert(self.one_minus(c, e))
            with self._lock:
                if len(self._inv_cache) < 8192:
                    self._inv_cache[key] = hit
        return hit

    def reduce_parts(self, v: int, num: fmpq_poly, den: fmpq_poly) -> fmpq_poly:
        """Residue of q**v * num / den."""
        if num.is_zero():
            return num
        top = self.rem(num)
        if not den.is_one():
            top = self.mul(top, self.invert(self.rem(den)))
        if v:
            top = self.mul(top, self.qpow(v))
        return top


_modulus_cache: dict[tuple[int, int], Modulus] = {}
_modulus_lock = threading.Lock()


def make_modulus(n: int, r: int = 1) -> Modulus:
    """Phi_n(q)^r; shared instances so their caches are reused."""
    key = (int(n), int(r))
    hit = _modulus_cache.get(key)
    if hit is not None:
        return hit
    mod = Modulus(*key)
    with _modulus_lock:
        return _modulus_cache.setdefault(key, mod)


class Residue:
    """An element of Q[q] / M in canonical remainder form."""

    __slots__ = ("rep_flint", "modulus")

    def __init__(self, rep, modulus: Modulus):
        if isinstance(rep, fmpq_poly):
            p = rep
        else:
            p = as_ratfun(rep)
            p = modulus.reduce_parts(*p.flint_parts())
        self.rep_flint = modulus.rem(p)
        self.modulus = modulus

    @classmethod
    def _raw(cls, p: fmpq_poly, modulus: Modulus):
        obj = object.__new__(cls)
        obj.rep_flint = p
        obj.modulus = modulus
        return obj

    @property
    def rep(self) -> LaurentPoly:
        return LaurentPoly.from_flint(self.rep_flint)

    def _other(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"{self.modulus} vs {other.modulus}")
            return other.rep_flint
        if isinstance(other, (int, fmpq)):
            return fmpq_poly([other])
        if isinstance(other, (LaurentPoly, RationalFunction)):
            return reduce(other, self.modulus).rep_flint
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Residue._raw(self.rep_flint + o, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return Residue._raw(-self.rep_flint, self.modulus)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Residue._raw(self.rep_flint - o, self.modulus)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Residue._raw(o - self.rep_flint, self.modulus)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Residue._raw(self.modulus.mul(self.rep_flint, o), self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Residue._raw(self.modulus.mul(self.rep_flint, self.modulus.invert(o)), self.modulus)

    def __pow__(self, k: int):
        base = self if k >= 0 else residue_inverse(self)
        k = abs(k)
        out = Residue._raw(fmpq_poly([1]), self.modulus)
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, Residue):
            return NotImplemented
        return self.modulus == other.modulus and self.rep_flint == other.rep_flint

    def __hash__(self):
        return hash((self.modulus, tuple(self.rep_flint.coeffs())))

    def is_zero(self) -> bool:
        return self.rep_flint.is_zero()

    def __bool__(self):
        return not self.rep_flint.is_zero()

    def __str__(self):
        return render_poly(self.rep)

    def __repr__(self):
        return f"Residue({str(self)!r} mod Phi_{self.modulus.n}^{self.modulus.r})"


def reduce(x, M: Modulus) -> Residue:
    """Image of a rational function (or Laurent polynomial) in Q[q]/M."""
    v, num, den = as_ratfun(x).flint_parts()
    return Residue._raw(M.reduce_parts(v, num, den), M)


def residue_inverse(x: Residue) -> Residue:
    return Residue._raw(x.modulus.invert(x.rep_flint), x.modulus)


def residue_is_zero(x: Residue) -> bool:
    return x.rep_flint.is_zero()
