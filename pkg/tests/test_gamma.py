from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from bmgamma.errors import DegreeTooLarge, NotSymmetric
from bmgamma.gamma import Classification, GammaVector, classify, from_gamma, gamma_vector, signed_poly
from bmgamma.poly import Poly
from bmgamma.symdecomp import decompose
from bmgamma.boros_moll import q_poly
from conftest import small_rats, symmetric_polys

C = Classification


def sympy_gamma(coeffs, n):
    """Oracle: solve sum_k g_k x^k (1+x)^(n-2k) = f as a linear system."""
    x = sympy.symbols("x")
    gs = sympy.symbols(f"g0:{n // 2 + 1}")
    expr = sum(g * x**k * (1 + x) ** (n - 2 * k) for k, g in enumerate(gs))
    target = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(coeffs))
    eqs = sympy.Poly(sympy.expand(expr - target), x).all_coeffs()
    sol = sympy.solve(eqs, gs, dict=True)[0]
    return [Fraction(int(sol[g].p), int(sol[g].q)) for g in gs]


def test_examples():
    assert list(gamma_vector(Poly([1, 1, 1]), 2).gammas) == [1, -1]
    assert list(gamma_vector(Poly([1, 4, 6, 4, 1]), 4).gammas) == [1, 0, 0]
    assert list(gamma_vector(Poly([12, 21, 12]), 2).gammas) == [12, -3]


def test_from_gamma_examples():
    assert from_gamma(GammaVector((Fraction(1), Fraction(-1)), 2)) == Poly([1, 1, 1])
    assert from_gamma(GammaVector((Fraction(5),), 0)) == Poly([5])


def test_length_is_fixed():
    with pytest.raises(ValueError):
        GammaVector((Fraction(1),), 2)
    assert len(gamma_vector(Poly(), 5)) == 3
    assert len(gamma_vector(Poly(), -1)) == 0


def test_errors():
    with pytest.raises(NotSymmetric):
        gamma_vector(Poly([2, 3]), 1)
    with pytest.raises(DegreeTooLarge):
        gamma_vector(Poly([1, 2, 1]), 1)


@given(symmetric_polys(max_n=20))
def test_round_trip(fn):
    f, n = fn
    gv = gamma_vector(f, n)
    assert from_gamma(gv) == f
    assert gv.gammas[0] == f[0]


@given(symmetric_polys(max_n=9))
def test_matches_linear_solve_oracle(fn):
    f, n = fn
    assert list(gamma_vector(f, n).gammas) == sympy_gamma(f.coeffs, n)


def test_classify_examples():
    assert classify(GammaVector((Fraction(1), Fraction(-1)), 2)) is C.ALTERNATINGLY_GAMMA_POSITIVE
    assert classify(GammaVector((Fraction(1), Fraction(0), Fraction(0)), 4)) is C.BOTH
    assert classify(GammaVector((Fraction(12), Fraction(-3)), 2), strict=True) is C.ALTERNATINGLY_GAMMA_POSITIVE
    assert classify(GammaVector((Fraction(2), Fraction(3)), 2)) is C.GAMMA_POSITIVE
    assert classify(GammaVector((Fraction(-2), Fraction(3)), 2)) is C.NEITHER
    assert classify(GammaVector((), -1)) is C.BOTH


def test_strict_versus_lax_on_interior_zero():
    gv = GammaVector((Fraction(3), Fraction(0), Fraction(1)), 4)
    # the zero fits either sign pattern when lax
    assert classify(gv) is C.BOTH
    assert classify(gv, strict=True) is C.NEITHER
    # trailing zeros are allowed even in strict mode
    tail = GammaVector((Fraction(3), Fraction(-1), Fraction(0)), 4)
    assert classify(tail, strict=True) is C.ALTERNATINGLY_GAMMA_POSITIVE


@given(st.lists(small_rats, min_size=1, max_size=6), st.fractions(min_value=Fraction(1, 10), max_value=100),
       st.booleans())
def test_classify_scale_invariant(gs, c, strict):
    n = 2 * (len(gs) - 1)
    gv = GammaVector(tuple(gs), n)
    scaled = GammaVector(tuple(g * c for g in gs), n)
    assert classify(gv, strict) == classify(scaled, strict)


def test_signed_poly_examples():
    d2 = decompose(q_poly(2), 2)
    assert signed_poly(gamma_vector(d2.a, 2)) == Poly([12, 3])
    d5 = decompose(q_poly(5), 5)
    assert signed_poly(gamma_vector(d5.b, 4)) == Poly([35595, 15435, 945])
    assert signed_poly(GammaVector((Fraction(0), Fraction(0)), 3)) == Poly()


def test_signed_views_positive_small():
    for m in range(1, 80):
        d = decompose(q_poly(m), m)
        for gv in (gamma_vector(d.a, m), gamma_vector(d.b, m - 1)):
            assert gv.is_integral()
            sp = signed_poly(gv)
            assert len(sp) == len(gv) and all(c > 0 for c in sp.coeffs)
