"""Registry of the finite Carlitz-type identities and their exact checker.

q stays symbolic; every other parameter is a sampled nonzero rational, so a
check is an equality of two canonical rational functions in q.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from flint import fmpq

from . import operators as ops
from .errors import InvalidIndex, ParamMissing, QVerifyError, SingularSample, UnknownId
from .operators import BPoly, GridFunction, ShiftOperator
from .qpoly import RF_ONE, RF_ZERO, RationalFunction, as_rational, as_ratfun
from .qseries import hahn, pfall, phi32, poch, poch_table, q_binomial_rf
from .report import ERROR, FAIL, PASS, CheckReport
from .sampling import SplitMix64, case_seed, draw_rational

__all__ = [
    "IdentityCase",
    "IdentitySpec",
    "REGISTRY",
    "identity_ids",
    "get_identity",
    "sample_case",
    "verify_identity",
    "carlitz_terms",
    "gen_basic_terms",
    "carlitz_phi",
    "carlitz_normalized_lhs",
    "op_identity_operators",
    "op_aa_rhs_operator",
    "POLY_F_MONOMIALS",
    "AA_READINGS",
]

MAX_RESAMPLE = 100


def C2(n: int) -> int:
    return n * (n - 1) // 2


def qp(e: int, c=1) -> RationalFunction:
    return RationalFunction.qpow(e, c)


def om(a, e: int) -> RationalFunction:
    """1 - a q^e for a rational or rational-function a."""
    if isinstance(a, RationalFunction):
        return RF_ONE - a * qp(e)
    return RationalFunction.one_minus(a, e)


def _rsum(terms) -> RationalFunction:
    total = RF_ZERO
    for t in terms:
        total = total + t
    return total


# -- shared pieces --------------------------------------------------------------


def aa_inner(n: int, k: int, u, v, s, t) -> RationalFunction:
    """sum_i (q^-k, us, ut; q)_i q^i / (q, u q^(1-k), uvst; q)_i * 3phi2(vs, vt, q^(k-n); 0, uvst q^i)."""
    u, v, s, t = (as_ratfun(x) for x in (u, v, s, t))
    uvst = u * v * s * t
    top = poch_table(qp(-k), k)
    us_t = poch_table(u * s, k)
    ut_t = poch_table(u * t, k)
    qq = poch_table(qp(1), k)
    low = poch_table(u * qp(1 - k), k)
    uv_t = poch_table(uvst, k)
    total = RF_ZERO
    for i in range(k + 1):
        coef = top[i] * us_t[i] * ut_t[i] * qp(i) / (qq[i] * low[i] * uv_t[i])
        total = total + coef * phi32(v * s, v * t, n - k, uvst * qp(i))
    return total


# Upper parameters of the right-hand 3phi2, tried in this order.  The first
# two are the printed variants; the third is the one that verifies.
AA_READINGS = ("vs,vt", "us,vt", "us,ut")


def aa_rhs_phi(k: int, u, v, s, t, reading: str = "us,ut") -> RationalFunction:
    """3phi2(p1, p2, q^-k; 0, uvst; q, q) with (p1, p2) named by ``reading``."""
    env = {"u": as_ratfun(u), "v": as_ratfun(v), "s": as_ratfun(s), "t": as_ratfun(t)}
    if reading not in AA_READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    p1, p2 = (env[w[0]] * env[w[1]] for w in reading.split(","))
    return phi32(p1, p2, k, env["u"] * env["v"] * env["s"] * env["t"])


# -- identity sides -------------------------------------------------------------


def carlitz_terms(n: int, a, b):
    """Term lists (lhs, rhs) of the Carlitz identity."""
    a, b = as_ratfun(a), as_ratfun(b)
    pa, pb, qq = poch_table(a, n + 1), poch_table(b, n), poch_table(qp(1), n)
    lhs = [pa[k] * pb[k] / qq[k] * (-a * b) ** (n - k) * qp(C2(n) - C2(k)) for k in range(n + 1)]
    rhs = [
        pa[n + 1] * (-b) ** k * qp(C2(k)) / (qq[k] * qq[n - k] * om(a, n - k))
        for k in range(n + 1)
    ]
    return lhs, rhs


def _carlitz(n, extra, s):
    lhs, rhs = carlitz_terms(n, s["a"], s["b"])
    return [("sides", _rsum(lhs), _rsum(rhs))]


def _wang_hahn(n, extra, s):
    a, b, x = (as_ratfun(s[k]) for k in "abx")
    pa, pb, pbx, qq = poch_table(a, n + 1), poch_table(b, n), poch_table(b * x, n), poch_table(qp(1), n)
    lhs = _rsum(
        pa[k] * pb[k] * pbx[k] / qq[k] * (-a * b) ** (n - k) * qp(C2(n) - C2(k)) * hahn(n - k, b * qp(k), x)
        for k in range(n + 1)
    )
    rhs = pa[n + 1] / qq[n] * _rsum(
        q_binomial_rf(n, k) * (-b) ** k * qp(C2(k)) / om(a, n - k) * hahn(k, b, x) for k in range(n + 1)
    )
    return [("sides", lhs, rhs)]


def _wang_aa(n, extra, s, reading="us,ut"):
    a, u, v = (as_ratfun(s[k]) for k in "auv")
    pa, pu, qq = poch_table(a, n + 1), poch_table(u.inverse(), n), poch_table(qp(1), n)
    lhs = _rsum(
        pa[k] * pu[k] / qq[k] * (-a / v) ** (n - k) * qp(C2(n) - C2(k)) * aa_inner(n, k, s["u"], s["v"], s["s"], s["t"])
        for k in range(n + 1)
    )
    rhs = pa[n + 1] / qq[n] * _rsum(
        q_binomial_rf(n, k) * (-u.inverse()) ** k * qp(C2(k)) / om(a, n - k) * aa_rhs_phi(k, s["u"], s["v"], s["s"], s["t"], reading)
        for k in range(n + 1)
    )
    return [("sides", lhs, rhs)]


def gen_basic_terms(n: int, a, b, x, y):
    """Term lists (lhs, rhs) of the P_k generalization with (ax, b; q)_k."""
    a, b, x, y = (as_ratfun(t) for t in (a, b, x, y))
    pax, pb, pay = poch_table(a * x, n), poch_table(b, n), poch_table(a * y, n)
    lhs = [
        q_binomial_rf(n, k) * pax[k] * pb[k] * pfall(x, y, n - k) * (-a * b) ** (n - k) * qp(C2(n) - C2(k))
        for k in range(n + 1)
    ]
    rhs = [
        pay[n] * q_binomial_rf(n, k) * pax[n - k] / pay[n - k] * (-b) ** k * qp(C2(k))
        for k in range(n + 1)
    ]
    return lhs, rhs


def _gen_basic(n, extra, s):
    lhs, rhs = gen_basic_terms(n, s["a"], s["b"], s["x"], s["y"])
    return [("sides", _rsum(lhs), _rsum(rhs))]


def _gen_hahn(n, extra, s):
    a, b, x, y, z = (as_ratfun(s[k]) for k in "abxyz")
    pax, pb, pbz, pay = poch_table(a * x, n), poch_table(b, n), poch_table(b * z, n), poch_table(a * y, n)
    lhs = _rsum(
        q_binomial_rf(n, k) * pb[k] * pax[k] * pbz[k] * pfall(x, y, n - k) * (-a * b) ** (n - k)
        * qp(C2(n) - C2(k)) * hahn(n - k, b * qp(k), z)
        for k in range(n + 1)
    )
    rhs = pay[n] * _rsum(
        q_binomial_rf(n, k) * pax[n - k] / pay[n - k] * (-b) ** k * qp(C2(k)) * hahn(k, b, z)
        for k in range(n + 1)
    )
    return [("sides", lhs, rhs)]


def _gen_aa(n, extra, s, reading="us,ut"):
    a, x, y, u, v = (as_ratfun(s[k]) for k in "axyuv")
    pu, pax, pay = poch_table(u.inverse(), n), poch_table(a * x, n), poch_table(a * y, n)
    lhs = _rsum(
        q_binomial_rf(n, k) * pu[k] * pax[k] * pfall(x, y, n - k) * (-a / v) ** (n - k) * qp(C2(n) - C2(k))
        * aa_inner(n, k, s["u"], s["v"], s["s"], s["t"])
        for k in range(n + 1)
    )
    rhs = pay[n] * _rsum(
        q_binomial_rf(n, k) * pax[n - k] / pay[n - k] * (-u.inverse()) ** k * qp(C2(k))
        * aa_rhs_phi(k, s["u"], s["v"], s["s"], s["t"], reading)
        for k in range(n + 1)
    )
    return [("sides", lhs, rhs)]


def _gen_m(n, extra, s):
    m = extra["m"]
    a, b = as_ratfun(s["a"]), as_ratfun(s["b"])
    pa, pb, qq, qm = poch_table(a, n + m), poch_table(b, n), poch_table(qp(1), n), poch_table(qp(m), n)
    lhs = _rsum(
        pa[k] * pb[k] * qm[n - k] / (qq[k] * qq[n - k]) * (-a * b) ** (n - k) * qp(C2(n) - C2(k))
        for k in range(n + 1)
    )
    rhs = pa[n + m] * _rsum(
        (-b) ** k * qp(C2(k)) / (qq[k] * qq[n - k] * poch(a * qp(n - k), m)) for k in range(n + 1)
    )
    return [("sides", lhs, rhs)]


def _equiv_form(n, extra, s):
    m = extra["m"]
    if n % 2 == 0:
        raise InvalidIndex(f"the symmetric form needs odd n, got {n}")
    h = (n - 1) // 2
    a, b = as_ratfun(s["a"]), as_ratfun(s["b"])
    pa, pb, qq = poch_table(a, n + m, 2), poch_table(b, n, 2), poch_table(qp(2), n, 2)
    lhs = _rsum(
        pa[k] * pb[k] / qq[k] * poch(qp(2 * n - 2 * k), m - 1, 2) * (-a * b) ** (n - k - 1) * qp(-k * k + k)
        for k in range(n)
    )
    pref = (
        q_binomial_rf(n - 1, h, 2)
        * q_binomial_rf(2 * n - 1, n - 1)
        * qp(-(n - 1) * (3 * n - 5) // 4, (-1) ** h)
        / poch(qp(1, -1), n - 1) ** 2
        * poch(qp(2), m - 1, 2)
        * pa[n + m - 1]
        / poch(qp(1), n, 2)
        * om(1, n)
    )
    inner = _rsum(
        poch(qp(1 - n), k, 2) / poch(qp(1 + n), k, 2) * b ** (k + h) * qp(2 * n * k - 2 * k)
        / poch(a * qp(n - 2 * k - 1), m, 2)
        for k in range(-h, h + 1)
    )
    return [("sides", lhs, pref * inner)]


def _delta_ratio(n, extra, s):
    a, x, y = (as_ratfun(s[k]) for k in "axy")
    pax, pay = poch_table(a * x, n), poch_table(a * y, n)
    lhs = _rsum(
        q_binomial_rf(n, j) * qp(C2(n - j), (-1) ** (n - j)) * pax[j] / pay[j] for j in range(n + 1)
    )
    rhs = pfall(x, y, n) * (-a) ** n * qp(C2(n)) / pay[n]
    return [("sides", lhs, rhs)]


def carlitz_phi(n: int, a, b) -> RationalFunction:
    """phi_n(a, b) = sum_k [n,k] (-b)^k q^C(k,2) / (1 - a q^(n-k))."""
    a, b = as_ratfun(a), as_ratfun(b)
    return _rsum(q_binomial_rf(n, k) * (-b) ** k * qp(C2(k)) / om(a, n - k) for k in range(n + 1))


def carlitz_normalized_lhs(n: int, a, b) -> RationalFunction:
    """(q;q)_n / (a;q)_(n+1) times the Carlitz left side."""
    lhs, _ = carlitz_terms(n, a, b)
    return poch(qp(1), n) / poch(a, n + 1) * _rsum(lhs)


def _pascal_step(n, extra, s):
    if n < 1:
        raise InvalidIndex(f"the one-step recurrence needs n >= 1, got {n}")
    a, b = as_ratfun(s["a"]), as_ratfun(s["b"])
    lhs = carlitz_phi(n, a, b)
    rhs = carlitz_phi(n - 1, a * qp(1), b * qp(1)) - b * carlitz_phi(n - 1, a, b * qp(1))
    return [("sides", lhs, rhs)]


# -- operator identities ----------------------------------------------------------

POLY_F_MONOMIALS = tuple((i, j) for i in range(4) for j in range(4) if i + j <= 3)


def _b_poch(k: int, scale=1, shift: int = 0) -> BPoly:
    """(scale * b * q^shift; q)_k as a polynomial in b."""
    out = BPoly.const(1)
    for j in range(k):
        out = out * BPoly({0: 1, 1: -qp(shift + j, 1) * as_ratfun(scale)})
    return out


def _b_hahn(m: int, shift: int, z) -> BPoly:
    """phi_m^{(b q^shift)}(z|q) as a polynomial in b."""
    z = as_ratfun(z)
    out = BPoly()
    for i in range(m + 1):
        out = out + _b_poch(i, 1, shift) * (q_binomial_rf(m, i) * z**i)
    return out


def _b_hahn_plain(k: int, z) -> BPoly:
    return _b_hahn(k, 0, z)


def _lhs_operator(n: int, coeff: Callable[[int], BPoly]) -> ShiftOperator:
    out = ShiftOperator()
    for k in range(n + 1):
        out = out + ops.op_mul(ops.eta_a(k), ops.delta_power(n - k)).scale(coeff(k) * q_binomial_rf(n, k))
    return out


def _rhs_operator(n: int, coeff: Callable[[int], BPoly]) -> ShiftOperator:
    out = ShiftOperator()
    minus_b = BPoly({1: -1})
    for k in range(n + 1):
        c = coeff(k) * minus_b**k * (q_binomial_rf(n, k) * qp(C2(k)))
        out = out + ops.eta_a(n - k).scale(c)
    return out


def op_identity_operators(ident: str, n: int, s: dict, reading: str = "us,ut"):
    """(L, R) as shift operators for OP_BASIC, OP_HAHN or OP_AA."""
    b = BPoly.b()
    if ident == "OP_BASIC":
        L = _lhs_operator(n, lambda k: b ** (n - k) * _b_poch(k))
        R = _rhs_operator(n, lambda k: BPoly.const(1))
    elif ident == "OP_HAHN":
        z = s["z"]
        L = _lhs_operator(n, lambda k: b ** (n - k) * _b_poch(k) * _b_poch(k, z) * _b_hahn(n - k, k, z))
        R = _rhs_operator(n, lambda k: _b_hahn_plain(k, z))
    elif ident == "OP_AA":
        u, v = as_ratfun(s["u"]), as_ratfun(s["v"])
        pu = poch_table(u.inverse(), n)
        L = _lhs_operator(
            n,
            lambda k: BPoly.const(pu[k] * v ** (k - n) * aa_inner(n, k, s["u"], s["v"], s["s"], s["t"])),
        )
        R = op_aa_rhs_operator(n, s, reading)
    else:
        raise UnknownId(ident)
    return L, R


def op_aa_rhs_operator(n: int, s: dict, reading: str = "us,ut") -> ShiftOperator:
    """Right side of the third operator identity; reading picks the first 3phi2 parameter."""
    u = as_ratfun(s["u"])
    out = ShiftOperator()
    for k in range(n + 1):
        c = q_binomial_rf(n, k) * (-u.inverse()) ** k * qp(C2(k)) * aa_rhs_phi(k, s["u"], s["v"], s["s"], s["t"], reading)
        out = out + ops.eta_a(n - k).scale(c)
    return out


def _poly_f(s: dict) -> GridFunction:
    coeffs = [(i, j, as_rational(s[f"c{i}{j}"])) for i, j in POLY_F_MONOMIALS]

    def f(A, B):
        total = RF_ZERO
        for i, j, c in coeffs:
            total = total + A**i * B**j * c
        return total

    return GridFunction.from_ab(s["a"], s["b"], f)


def _pole_f(s: dict) -> GridFunction:
    return GridFunction.from_ab(s["a"], s["b"], lambda A, B: (RF_ONE - A).inverse())


def _op_checks(ident):
    def run(n, extra, s, reading="us,ut"):
        L, R = op_identity_operators(ident, n, s, reading)
        out = []
        if ident == "OP_BASIC":
            b = BPoly.b()
            re = ShiftOperator()
            for k in range(n + 1):
                c = b**k * _b_poch(n - k) * q_binomial_rf(n, k)
                re = re + ops.op_mul(ops.eta_a(n - k), ops.delta_power(k)).scale(c)
            out.append(("reindexed", L, re))
        out.append(("operator", L, R))
        for label, f in (("f=poly", _poly_f(s)), ("f=1/(1-a)", _pole_f(s))):
            out.append((label, ops.op_apply(L, f), ops.op_apply(R, f)))
        return out

    return run


# -- registry --------------------------------------------------------------------


def _a_not_one(s):
    return s["a"] != 1


def _ay_not_one(s):
    return s["a"] * s["y"] != 1


def _aa_ok(s):
    return s["u"] != 1 and s["u"] * s["v"] * s["s"] * s["t"] != 1


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    anchor: str
    symbols: tuple
    extras: dict  # name -> (lo, hi) default range
    n_range: tuple  # (lo, hi) default acceptance range
    sides: Callable
    admissible: Callable = lambda s: True
    odd_only: bool = False
    readings: tuple = ()
    suite: str = "identities"

    def schema(self) -> str:
        parts = ["n"] + [f"{k} in [{lo},{hi}]" for k, (lo, hi) in self.extras.items()] + list(self.symbols)
        return ", ".join(parts)

    def n_values(self, n_max: int | None = None) -> list:
        lo, hi = self.n_range
        hi = hi if n_max is None else min(n_max, hi) if n_max >= lo else lo - 1
        return [n for n in range(lo, hi + 1) if not self.odd_only or n % 2 == 1]


_POLY_SYMBOLS = tuple(f"c{i}{j}" for i, j in POLY_F_MONOMIALS)

REGISTRY: dict[str, IdentitySpec] = {}


def _register(spec: IdentitySpec):
    REGISTRY[spec.id] = spec


_register(IdentitySpec(
    "CARLITZ", "Carlitz transformation in a, b",
    ("a", "b"), {}, (0, 20), _carlitz, _a_not_one))
_register(IdentitySpec(
    "WANG_HAHN", "Carlitz-type identity with Hahn polynomials in x",
    ("a", "b", "x"), {}, (0, 12), _wang_hahn, _a_not_one))
_register(IdentitySpec(
    "WANG_AA", "Carlitz-type identity with nested terminating 3phi2 sums in u, v, s, t",
    ("a", "u", "v", "s", "t"), {}, (0, 12), _wang_aa, lambda s: _a_not_one(s) and _aa_ok(s),
    readings=AA_READINGS))
_register(IdentitySpec(
    "OP_BASIC", "shift-operator identity, plain coefficients",
    ("a", "b") + _POLY_SYMBOLS, {}, (0, 10), _op_checks("OP_BASIC"), _a_not_one))
_register(IdentitySpec(
    "OP_HAHN", "shift-operator identity with Hahn coefficients in z",
    ("a", "b", "z") + _POLY_SYMBOLS, {}, (0, 10), _op_checks("OP_HAHN"), _a_not_one))
_register(IdentitySpec(
    "OP_AA", "shift-operator identity with 3phi2 coefficients in u, v, s, t",
    ("a", "b", "u", "v", "s", "t") + _POLY_SYMBOLS, {}, (0, 10), _op_checks("OP_AA"),
    lambda s: _a_not_one(s) and _aa_ok(s), readings=AA_READINGS))
_register(IdentitySpec(
    "GEN_BASIC", "P_k generalization of the Carlitz identity",
    ("a", "b", "x", "y"), {}, (0, 12), _gen_basic, _ay_not_one))
_register(IdentitySpec(
    "GEN_HAHN", "P_k generalization with Hahn polynomials in z",
    ("a", "b", "x", "y", "z"), {}, (0, 12), _gen_hahn, _ay_not_one))
_register(IdentitySpec(
    "GEN_AA", "P_k generalization with nested 3phi2 sums",
    ("a", "x", "y", "u", "v", "s", "t"), {}, (0, 12), _gen_aa, lambda s: _ay_not_one(s) and _aa_ok(s),
    readings=AA_READINGS))
_register(IdentitySpec(
    "GEN_M", "Carlitz identity with (q^m; q) factors, x = 1, y = q^m",
    ("a", "b"), {"m": (1, 6)}, (0, 20), _gen_m, _a_not_one))
_register(IdentitySpec(
    "EQUIV_FORM", "symmetric-sum form in base q^2, n odd",
    ("a", "b"), {"m": (1, 4)}, (1, 12), _equiv_form, _a_not_one, odd_only=True))
_register(IdentitySpec(
    "DELTA_RATIO", "finite form of Delta^n on (ay;q)_inf/(ax;q)_inf",
    ("a", "x", "y"), {}, (0, 20), _delta_ratio, _ay_not_one))
_register(IdentitySpec(
    "PASCAL_STEP", "one q-Pascal step of phi_n(a, b)",
    ("a", "b"), {}, (1, 20), _pascal_step, _a_not_one))


def identity_ids() -> list:
    return list(REGISTRY)


def get_identity(ident: str) -> IdentitySpec:
    try:
        return REGISTRY[ident]
    except KeyError:
        raise UnknownId(ident) from None


@dataclass(frozen=True)
class IdentityCase:
    id: str
    n: int
    extra: dict = field(default_factory=dict)
    sample: dict = field(default_factory=dict)
    seed: int = 0

    def params(self) -> dict:
        out = {"n": self.n, **self.extra}
        out.update({k: self.sample[k] for k in sorted(self.sample)})
        return out


def sample_case(ident: str, n: int, extra: dict | None = None, seed: int = 0, trial: int = 0,
                fixed: dict | None = None) -> IdentityCase:
    """Draw a case from the seeded generator; ``fixed`` values override draws.

    Samples failing the identity's admissibility test are redrawn, up to
    MAX_RESAMPLE times.
    """
    spec = get_identity(ident)
    extra = dict(extra or {})
    fixed = {k: as_rational(v) for k, v in (fixed or {}).items()}
    base = case_seed(seed, ident, n, sorted(extra.items()), trial)
    for attempt in range(MAX_RESAMPLE):
        rng = SplitMix64(case_seed(base, attempt))
        sample = {}
        for name in spec.symbols:
            val = draw_rational(rng)
            sample[name] = fixed.get(name, val)
        if spec.admissible(sample):
            return IdentityCase(ident, n, extra, sample, base)
        if fixed and all(k in fixed for k in spec.symbols):
            break
    raise SingularSample(f"{ident}: no admissible sample after {MAX_RESAMPLE} draws")


def _check_case(case: IdentityCase, spec: IdentitySpec):
    missing = [k for k in spec.symbols if k not in case.sample]
    missing += [k for k in spec.extras if k not in case.extra]
    if missing:
        raise ParamMissing(f"{case.id}: missing {', '.join(missing)}")
    if case.n < 0:
        raise InvalidIndex(f"n must be >= 0, got {case.n}")
    sample = {k: as_rational(case.sample[k]) for k in spec.symbols}
    if any(v == 0 for v in sample.values()):
        raise SingularSample(f"{case.id}: sampled parameters must be nonzero")
    if not spec.admissible(sample):
        raise SingularSample(f"{case.id}: sample makes a denominator factor vanish")
    for k, (lo, _) in spec.extras.items():
        if case.extra[k] < lo:
            raise InvalidIndex(f"{k} must be >= {lo}, got {case.extra[k]}")
    return sample


def verify_identity(case: IdentityCase) -> CheckReport:
    """Exact check of one sampled case; fail carries the canonical LHS - RHS."""
    spec = get_identity(case.id)
    sample = _check_case(case, spec)
    t0 = time.perf_counter()
    notes = []
    first_bad = None
    for reading in spec.readings or (None,):
        extra_arg = () if reading is None else (reading,)
        try:
            checks = spec.sides(case.n, dict(case.extra), sample, *extra_arg)
        except QVerifyError as exc:
            return CheckReport(case.id, case.params(), ERROR, f"{type(exc).__name__}: {exc}",
                               int((time.perf_counter() - t0) * 1e6), notes)
        bad = [f"{label}: {lhs - rhs}" for label, lhs, rhs in checks if lhs != rhs]
        if reading is not None:
            notes.append(f"reading {reading}: {'fail' if bad else 'pass'}")
        if not bad:
            return CheckReport(case.id, case.params(), PASS, "", int((time.perf_counter() - t0) * 1e6), notes)
        if first_bad is None:
            first_bad = bad
    return CheckReport(case.id, case.params(), FAIL, "; ".join(first_bad),
                       int((time.perf_counter() - t0) * 1e6), notes)
