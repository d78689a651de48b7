"""Noncommutative q-shift operators in two variables a and b.

An operator is a finite sum of c(b, q) * eta_a^i * eta_b^j, where c is a
polynomial in a formal symbol b with rational-function-in-q coefficients.
Moving eta_b^j past c(b) turns it into c(b q^j), which is the whole
commutation rule.
"""

from __future__ import annotations

from typing import Callable, Mapping

from .errors import InvalidIndex, UndefinedShift
from .qpoly import RF_ONE, RF_ZERO, RationalFunction, as_rational, as_ratfun
from .qseries import q_binomial_rf

__all__ = [
    "BPoly",
    "ShiftTerm",
    "ShiftOperator",
    "GridFunction",
    "op_mul",
    "op_add",
    "op_apply",
    "delta_power",
    "carlitz_power",
    "eta_a",
    "eta_b",
    "identity_op",
    "delta_closed_form",
    "carlitz_closed_form",
]


class BPoly:
    """Polynomial in b with RationalFunction coefficients; {power: coeff}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        clean = {}
        for m, c in (coeffs or {}).items():
            if m < 0:
                raise InvalidIndex(f"negative power of b: {m}")
            c = as_ratfun(c)
            if c:
                clean[int(m)] = c
        self.coeffs = clean

    @classmethod
    def _raw(cls, coeffs):
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        return obj

    @classmethod
    def const(cls, c) -> "BPoly":
        return cls({0: c})

    @classmethod
    def b(cls) -> "BPoly":
        return cls({1: RF_ONE})

    def __bool__(self):
        return bool(self.coeffs)

    @staticmethod
    def _coerce(other):
        if isinstance(other, BPoly):
            return other
        try:
            return BPoly.const(other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return BPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BPoly._raw({m: -c for m, c in self.coeffs.items()})

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
        out: dict[int, RationalFunction] = {}
        for m, c in self.coeffs.items():
            for k, d in other.coeffs.items():
                s = out.get(m + k)
                out[m + k] = c * d if s is None else s + c * d
        return BPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidIndex(f"negative power of a b-polynomial: {k}")
        out = BPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def shift_b(self, j: int) -> "BPoly":
        """c(b) -> c(b q^j)."""
        if j == 0:
            return self
        return BPoly._raw({m: c * RationalFunction.qpow(j * m) for m, c in self.coeffs.items()})

    def at(self, b0) -> RationalFunction:
        """Evaluate b -> b0 (a rational or a rational function of q)."""
        b0 = as_ratfun(b0)
        total = RF_ZERO
        for m, c in self.coeffs.items():
            total = total + c * b0**m
        return total

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m in sorted(self.coeffs):
            c = self.coeffs[m]
            var = "" if m == 0 else ("b" if m == 1 else f"b^{m}")
            parts.append(f"[{c}]{'*' + var if var else ''}")
        return " + ".join(parts)

    __repr__ = __str__


class ShiftTerm:
    """coeff(b, q) * eta_a^shift_a * eta_b^shift_b."""

    __slots__ = ("coeff", "shift_a", "shift_b")

    def __init__(self, coeff, shift_a: int = 0, shift_b: int = 0):
        if shift_a < 0 or shift_b < 0:
            raise InvalidIndex("shift exponents must be nonnegative")
        coeff = coeff if isinstance(coeff, BPoly) else BPoly.const(coeff)
        if not coeff:
            raise ValueError("a shift term needs a nonzero coefficient")
        self.coeff = coeff
        self.shift_a = shift_a
        self.shift_b = shift_b

    def __repr__(self):
        return f"ShiftTerm({self.coeff}, {self.shift_a}, {self.shift_b})"


class ShiftOperator:
    """Normalized sum of shift terms, keyed by (shift_a, shift_b)."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        acc: dict[tuple[int, int], BPoly] = {}
        for t in terms:
            if not isinstance(t, ShiftTerm):
                t = ShiftTerm(*t)
            key = (t.shift_a, t.shift_b)
            s = acc.get(key)
            acc[key] = t.coeff if s is None else s + t.coeff
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @property
    def terms(self) -> list[ShiftTerm]:
        return [ShiftTerm(c, i, j) for (i, j), c in sorted(self._terms.items())]

    def keys(self):
        return sorted(self._terms)

    def coeff(self, i: int, j: int) -> BPoly:
        return self._terms.get((i, j), BPoly())

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, ShiftOperator):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        return op_add(self, other)

    def __sub__(self, other):
        return op_add(self, other.scale(-1))

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, ShiftOperator):
            return op_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "ShiftOperator":
        """Left multiplication by a scalar or BPoly coefficient."""
        c = c if isinstance(c, BPoly) else BPoly.const(c)
        out = {}
        for k, v in self._terms.items():
            w = c * v
            if w:
                out[k] = w
        return ShiftOperator._raw(out)

    def __pow__(self, k: int):
        if k < 0:
            raise InvalidIndex("operators have no inverses here")
        out = identity_op()
        for _ in range(k):
            out = op_mul(out, self)
        return out

    def __repr__(self):
        body = " + ".join(f"({c})*Ea^{i}*Eb^{j}" for (i, j), c in sorted(self._terms.items()))
        return f"ShiftOperator({body or '0'})"


def identity_op() -> ShiftOperator:
    return ShiftOperator._raw({(0, 0): BPoly.const(1)})


def eta_a(k: int = 1) -> ShiftOperator:
    return ShiftOperator._raw({(k, 0): BPoly.const(1)})


def eta_b(k: int = 1) -> ShiftOperator:
    return ShiftOperator._raw({(0, k): BPoly.const(1)})


def op_add(A: ShiftOperator, B: ShiftOperator) -> ShiftOperator:
    out = dict(A._terms)
    for k, c in B._terms.items():
        s = out.get(k)
        s = c if s is None else s + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return ShiftOperator._raw(out)


def op_mul(A: ShiftOperator, B: ShiftOperator) -> ShiftOperator:
    """Composition A o B (apply B first)."""
    out: dict[tuple[int, int], BPoly] = {}
    for (i, j), c in A._terms.items():
        for (k, l), d in B._terms.items():
            key = (i + k, j + l)
            t = c * d.shift_b(j)
            s = out.get(key)
            out[key] = t if s is None else s + t
    return ShiftOperator._raw({k: v for k, v in out.items() if v})


class GridFunction:
    """Values of f(a0 q^i, b0 q^j) as rational functions of q."""

    def __init__(self, a0, b0, rule: Callable[[int, int], RationalFunction] | Mapping):
        self.a0 = as_rational(a0)
        self.b0 = as_rational(b0)
        if self.a0 == 0 or self.b0 == 0:
            raise ValueError("base point coordinates must be nonzero")
        self._rule = rule
        self._cache: dict[tuple[int, int], RationalFunction] = {}

    @classmethod
    def from_ab(cls, a0, b0, func: Callable[[RationalFunction, RationalFunction], RationalFunction]):
        """Grid from a closed form f(a, b), with a = a0 q^i and b = b0 q^j."""
        a0r, b0r = as_rational(a0), as_rational(b0)

        def rule(i, j):
            return as_ratfun(func(RationalFunction.qpow(i, a0r), RationalFunction.qpow(j, b0r)))

        return cls(a0, b0, rule)

    def __call__(self, i: int, j: int) -> RationalFunction:
        key = (i, j)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if callable(self._rule):
            val = self._rule(i, j)
        else:
            if key not in self._rule:
                raise UndefinedShift(f"no value for shift {key}")
            val = as_ratfun(self._rule[key])
        self._cache[key] = val
        return val


def op_apply(A: ShiftOperator, f: GridFunction) -> RationalFunction:
    """Sum over terms of coeff(b0, q) * f(a0 q^i, b0 q^j)."""
    total = RF_ZERO
    for (i, j), c in sorted(A._terms.items()):
        total = total + c.at(f.b0) * f(i, j)
    return total


def delta_power(k: int) -> ShiftOperator:
    """(eta_a - 1)(eta_a - q)...(eta_a - q^(k-1))."""
    if k < 0:
        raise InvalidIndex(f"delta power needs k >= 0, got {k}")
    out = identity_op()
    for j in range(k):
        step = op_add(eta_a(), identity_op().scale(-RationalFunction.qpow(j)))
        out = op_mul(out, step)
    return out


def carlitz_power(n: int) -> ShiftOperator:
    """(eta_a eta_b - b eta_b)^n."""
    if n < 0:
        raise InvalidIndex(f"power needs n >= 0, got {n}")
    base = ShiftOperator._raw({(1, 1): BPoly.const(1), (0, 1): -BPoly.b()})
    out = identity_op()
    for _ in range(n):
        out = op_mul(out, base)
    return out


def delta_closed_form(k: int) -> ShiftOperator:
    """sum_j [k,j] (-1)^(k-j) q^C(k-j,2) eta_a^j."""
    terms = {}
    for j in range(k + 1):
        c = q_binomial_rf(k, j) * RationalFunction.qpow((k - j) * (k - j - 1) // 2, (-1) ** (k - j))
        terms[(j, 0)] = BPoly.const(c)
    return ShiftOperator._raw(terms)


def carlitz_closed_form(n: int) -> ShiftOperator:
    """sum_k [n,k] (-b eta_b)^k (eta_a eta_b)^(n-k), expanded by composition."""
    minus_b_eta_b = ShiftOperator._raw({(0, 1): -BPoly.b()})
    both = ShiftOperator._raw({(1, 1): BPoly.const(1)})
    out = ShiftOperator._raw({})
    for k in range(n + 1):
        out = op_add(out, op_mul(minus_b_eta_b**k, both ** (n - k)).scale(q_binomial_rf(n, k)))
    return out
