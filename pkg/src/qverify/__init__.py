"""Exact verification of Carlitz-type q-identities and q-congruences."""

__version__ = "0.1.0"

from .errors import QVerifyError
from .qpoly import LaurentPoly, RationalFunction, cyclotomic, parse_poly, parse_ratfun, render_poly
from .qring import Modulus, Residue, make_modulus, reduce
from .qseries import phi32, poch, q_binomial
from .operators import ShiftOperator, carlitz_power, delta_power, op_apply, op_mul
from .identities import IdentityCase, sample_case, verify_identity
from .congruences import CongruenceCase, PrimeCase, verify_congruence, verify_prime_congruence

__all__ = [
    "__version__",
    "QVerifyError",
    "LaurentPoly",
    "RationalFunction",
    "cyclotomic",
    "parse_poly",
    "parse_ratfun",
    "render_poly",
    "Modulus",
    "Residue",
    "make_modulus",
    "reduce",
    "phi32",
    "poch",
    "q_binomial",
    "ShiftOperator",
    "carlitz_power",
    "delta_power",
    "op_apply",
    "op_mul",
    "IdentityCase",
    "sample_case",
    "verify_identity",
    "CongruenceCase",
    "PrimeCase",
    "verify_congruence",
    "verify_prime_congruence",
]
