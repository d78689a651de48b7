import os
import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

from qverify.qpoly import LaurentPoly, RationalFunction  # noqa: E402

small_int = st.integers(min_value=-9, max_value=9)
nonzero_small = small_int.filter(bool)
rationals = st.builds(Fraction, small_int, nonzero_small)
nonzero_rationals = st.builds(Fraction, nonzero_small, nonzero_small)


def laurent(min_exp=-4, max_exp=6, max_terms=5):
    return st.dictionaries(st.integers(min_exp, max_exp), rationals, max_size=max_terms).map(LaurentPoly)


def ordinary(max_exp=6, max_terms=5):
    return laurent(0, max_exp, max_terms)


nonzero_laurent = laurent().filter(bool)
ratfuns = st.builds(RationalFunction, laurent(), nonzero_laurent)
