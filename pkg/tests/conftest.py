from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from bmgamma.poly import Poly

settings.register_profile("default", max_examples=80, deadline=None)
settings.load_profile("default")

small_rats = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@st.composite
def polys(draw, max_degree=12, elements=small_rats):
    cs = draw(st.lists(elements, max_size=max_degree + 1))
    return Poly(cs)


@st.composite
def symmetric_polys(draw, max_n=20, elements=small_rats):
    """(f, n) with f palindromic about n/2 (deg f may be < n only if f = 0)."""
    n = draw(st.integers(0, max_n))
    half = draw(st.lists(elements, min_size=n // 2 + 1, max_size=n // 2 + 1))
    cs = [half[min(i, n - i)] for i in range(n + 1)]
    return Poly(cs), n


@pytest.fixture
def P5():
    return Poly([Fraction(4389, 256), Fraction(8589, 128), Fraction(7161, 64),
                 Fraction(777, 8), Fraction(693, 16), Fraction(63, 8)])


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # exposes rep_setup / rep_call / rep_teardown to fixtures (used by the acceptance verdict lines)
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)
