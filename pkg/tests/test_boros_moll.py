import math
from fractions import Fraction

import mpmath
import pytest

from bmgamma.boros_moll import (
    c_row,
    d_row_closed,
    d_row_recurrence,
    integral_check,
    integral_lhs,
    iter_c_rows,
    iter_d_rows,
    iter_q_ode,
    p_poly,
    q_from_p,
    q_poly,
    q_poly_ode,
    q_special_values,
)
from bmgamma.errors import QuadratureNonConvergence
from bmgamma.kernels import double_factorial_odd, factorial
from bmgamma.poly import Poly
from bmgamma.props import is_unimodal

P5_COEFFS = [Fraction(4389, 256), Fraction(8589, 128), Fraction(7161, 64),
             Fraction(777, 8), Fraction(693, 16), Fraction(63, 8)]


def expand(scale, *factors):
    out = Poly([scale])
    for f in factors:
        out = out * Poly(f)
    return out


def test_d_rows_examples():
    assert d_row_recurrence(0).d == (1,)
    assert d_row_recurrence(1).d == (Fraction(3, 2), 1)
    assert list(d_row_recurrence(5).d) == P5_COEFFS


def test_d_closed_examples():
    assert d_row_closed(0).d == (1,)
    # single term k = 1: 2 * C(0,0) * C(2,1) * C(1,1) / 4
    assert d_row_closed(1).d[1] == 1
    assert list(d_row_closed(5).d) == P5_COEFFS


def test_p_poly_examples(P5):
    assert p_poly(0) == Poly([1])
    assert p_poly(1) == Poly([Fraction(3, 2), 1])
    assert p_poly(5) == P5


def test_c_row_examples():
    assert c_row(0).c == (1,)
    assert c_row(1).c == (2, 3)
    assert c_row(2).c == (12, 30, 21)
    assert all(isinstance(v, int) for v in c_row(7).c)


def test_q_poly_examples():
    assert q_poly(0) == Poly([1])
    assert q_poly(1) == Poly([2, 3])
    q3 = expand(3, [40, 103, 103, 40]) + Poly.x() * expand(3, [37, 69, 37])
    assert q3 == Poly([120, 420, 516, 231])
    assert q_poly(3) == q3


def test_q_ode_examples():
    assert q_poly_ode(0) == Poly([1])
    assert q_poly_ode(1) == Poly([2, 3])
    q4 = expand(105, [16, 55, 79, 55, 16]) + Poly.x() * expand(255, [1, 1], [7, 12, 7])
    assert q_poly_ode(4) == q4


def test_special_values_examples():
    sv = q_special_values(2)
    assert (sv.at0, sv.at1, sv.atm1) == (12, 63, 3)
    sv = q_special_values(0)
    assert (sv.at0, sv.at1, sv.atm1) == (1, 1, 1)
    assert q_special_values(5).at0 == 30240


def test_routes_agree_small():
    M = 60
    ds, cs, qs = list(iter_d_rows(M)), list(iter_c_rows(M)), list(iter_q_ode(M))
    for m in range(M + 1):
        assert ds[m].d == d_row_closed(m).d
        q = Poly(cs[m].c)
        assert q == qs[m] == q_from_p(m, Poly(ds[m].d))
        scale = 2**m * factorial(m)
        assert all(cs[m].c[i] == scale * ds[m].d[m - i] for i in range(m + 1))


def test_special_values_match_evaluation():
    for m, row in enumerate(iter_c_rows(80)):
        q = Poly(row.c)
        sv = q_special_values(m)
        assert q(0) == sv.at0 == factorial(2 * m) // factorial(m)
        assert q(1) == sv.at1
        assert q(-1) == sv.atm1 == (-1) ** m * double_factorial_odd(m)


def test_d_row_invariants():
    for row in iter_d_rows(80):
        assert all(v > 0 for v in row.d)
        assert all((v * 4**row.m).denominator == 1 for v in row.d)
        ok, mode = is_unimodal(Poly(row.d))
        assert ok and mode in (row.m // 2, (row.m + 1) // 2)


def test_rows_reject_negative_m():
    with pytest.raises(ValueError):
        d_row_recurrence(-1)
    with pytest.raises(ValueError):
        c_row(-1)


# quadrature


def test_integral_m0_x1_is_quarter_pi():
    r = integral_check(0, 1.0, 1e-10)
    assert r.ok
    assert r.rhs == pytest.approx(math.pi / 4, rel=1e-15)
    assert r.lhs == pytest.approx(math.pi / 4, rel=1e-10)


def test_integral_m0_x0():
    r = integral_check(0, 0.0, 1e-10)
    assert r.ok
    assert r.lhs == pytest.approx(math.pi / 2**1.5, rel=1e-10)


def test_integral_m3_x2():
    assert integral_check(3, 2.0, 1e-8).ok


@pytest.mark.parametrize("m, x", [(2, 0.5), (4, 3.0), (1, -0.5)])
def test_integral_against_mpmath_on_half_line(m, x):
    # independent oracle: mpmath tanh-sinh on the untransformed [0, inf)
    mpmath.mp.dps = 30
    ref = mpmath.quad(lambda y: 1 / (1 + 2 * x * y**2 + y**4) ** (m + 1), [0, 1, mpmath.inf])
    assert integral_lhs(m, x) == pytest.approx(float(ref), rel=1e-11)


def test_integral_rejects_bad_input():
    with pytest.raises(ValueError):
        integral_check(0, -1.0, 1e-8)
    with pytest.raises(ValueError):
        integral_check(0, 0.0, 0.0)


def test_quadrature_failure_is_reported(monkeypatch):
    from bmgamma import boros_moll

    monkeypatch.setattr(boros_moll.integrate, "quad", lambda *a, **k: (1.0, 1.0, {}, "max subdivisions reached"))
    with pytest.raises(QuadratureNonConvergence):
        integral_lhs(1, 1.0)
