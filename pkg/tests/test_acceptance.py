"""Acceptance criteria. Each test prints one PASS/FAIL line (visible even without -s).

Run alone with:  pytest tests/test_acceptance.py -v
"""
import time
from fractions import Fraction

import pytest

from bmgamma import fixtures
from bmgamma.boros_moll import (
    d_row_closed,
    integral_check,
    iter_c_rows,
    iter_d_rows,
    iter_q_ode,
    q_special_values,
)
from bmgamma.kernels import binomial, double_factorial_odd, factorial
from bmgamma.jacobi import jacobi_poly
from bmgamma.poly import Poly
from bmgamma.props import is_alternatingly_increasing, is_spiral, is_unimodal
from bmgamma.symdecomp import decompose
from bmgamma.triangles import (
    build_triangle,
    gamma_of_decomposition,
    iter_signed,
    unsign,
    verify_lemma31,
)
from bmgamma.verify import oeis_compare


@pytest.fixture
def announce(request, capsys):
    """Print a single verdict line for the criterion under test."""
    state = {"t0": time.perf_counter(), "detail": ""}
    yield state
    failed = getattr(request.node, "rep_call", None) is None or request.node.rep_call.failed
    dt = time.perf_counter() - state["t0"]
    with capsys.disabled():
        print(f"\n[{'FAIL' if failed else 'PASS'}] {request.node.name}: {state['detail']} ({dt:.2f}s)")


def test_c1_golden_reproduction(announce):
    t0 = time.perf_counter()
    p5 = Poly(list(iter_d_rows(5))[5].d)
    assert list(p5.coeffs) == list(fixtures.P5)
    assert list(fixtures.P5) == [Fraction(4389, 256), Fraction(8589, 128), Fraction(7161, 64),
                                 Fraction(777, 8), Fraction(693, 16), Fraction(63, 8)]
    rows = list(iter_c_rows(5))
    for m in range(1, 6):
        a, b = fixtures.golden_decomposition(m)
        d = decompose(Poly(rows[m].c), m)
        assert (d.a, d.b) == (a, b), m
    signed = list(iter_signed(5))
    for m in range(6):
        ea, eb = fixtures.SIGNED[m]
        assert signed[m] == (Poly(ea), Poly(eb)), m
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    announce["detail"] = f"P_5, Q_1..Q_5 splits, alpha/beta m<=5 exact; {elapsed:.3f}s < 1s"


def test_c2_route_equivalence(announce):
    t0 = time.perf_counter()
    d_rows = list(iter_d_rows(300))
    for m in range(201):
        assert d_row_closed(m).d == d_rows[m].d, m
    c_rows = list(iter_c_rows(300))
    q_odes = list(iter_q_ode(300))
    for m in range(301):
        q = Poly(c_rows[m].c)
        via_p = Poly(d_rows[m].d).reverse(m) * (2**m * factorial(m))
        assert q == q_odes[m] == via_p, m
    tri = build_triangle(300)
    signed = list(iter_signed(300))
    for m in range(301):
        ga, gb = gamma_of_decomposition(decompose(Poly(c_rows[m].c), m))
        row = tri[m]
        al, be = signed[m]
        assert tuple(ga.ints()) == row.alpha == unsign(al, len(row.alpha)), m
        assert tuple(gb.ints()) == row.beta == unsign(be, len(row.beta)), m
        assert al.degree < len(row.alpha) and be.degree < len(row.beta)
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0
    announce["detail"] = f"d routes m<=200, Q routes m<=300, triangle routes m<=300; {elapsed:.1f}s < 60s"


def test_c3_sign_law_to_1000(announce):
    t0 = time.perf_counter()
    tri = build_triangle(1000)
    for m in range(1, 1001):
        row = tri[m]
        assert len(row.alpha) == m // 2 + 1 and len(row.beta) == (m - 1) // 2 + 1
        assert all((-1) ** k * v > 0 for k, v in enumerate(row.alpha)), m
        assert all((-1) ** k * v > 0 for k, v in enumerate(row.beta)), m
    elapsed = time.perf_counter() - t0
    assert elapsed < 300.0
    announce["detail"] = f"strict alternation for 1<=m<=1000; {elapsed:.1f}s < 300s"


def test_c4_closed_values(announce):
    for m, row in enumerate(iter_c_rows(300)):
        q = Poly(row.c)
        sv = q_special_values(m)
        assert q(0) == sv.at0 == factorial(2 * m) // factorial(m)
        assert q(1) == sv.at1 == Fraction(factorial(m), 2 ** (m + 1)) * binomial(4 * m + 2, 2 * m + 1)
        assert q(-1) == sv.atm1 == (-1) ** m * double_factorial_odd(m)
    announce["detail"] = "Q_m(0), Q_m(1), Q_m(-1) exact for m<=300"


def test_c5_shape_properties(announce):
    c_rows = list(iter_c_rows(300))
    for m, drow in enumerate(iter_d_rows(300)):
        p = Poly(drow.d)
        assert is_spiral(p), m
        assert is_alternatingly_increasing(p.reverse(m)), m
        if m >= 1:
            d = decompose(Poly(c_rows[m].c), m)
            assert is_unimodal(d.a)[0] and is_unimodal(d.b)[0], m
    announce["detail"] = "spiral, alternatingly increasing, unimodal split for m<=300"


def test_c6_step_identities(announce):
    c_rows = list(iter_c_rows(51))
    for m in range(51):
        rep = verify_lemma31(m, Poly(c_rows[m].c), Poly(c_rows[m + 1].c))
        assert rep.ok, rep.failures
    announce["detail"] = "a/b step identities and reversed-Q recurrence exact for m<=50"


def test_c7_jacobi_specialization(announce):
    for m, drow in enumerate(iter_d_rows(50)):
        half = Fraction(2 * m + 1, 2)
        assert jacobi_poly(m, half, -half) == Poly(drow.d), m
    announce["detail"] = "P_m^(m+1/2, -(m+1/2)) = P_m exact for m<=50"


def test_c8_integral(announce):
    t0 = time.perf_counter()
    worst = 0.0
    for m in range(6):
        for x in (0.0, 0.5, 1.0, 3.0):
            r = integral_check(m, x, 1e-8)
            worst = max(worst, abs(r.lhs - r.rhs) / abs(r.rhs))
            assert r.ok, (m, x, r)
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0
    announce["detail"] = f"24 points within rel 1e-8 (worst {worst:.1e}); {elapsed:.2f}s < 5s"


def test_c9_oeis_fixtures(announce):
    first, terms = fixtures.OEIS["A001813"]
    assert len(terms) >= 20
    tri = build_triangle(len(terms))
    c_rows = list(iter_c_rows(len(terms)))
    assert oeis_compare("A001813", [tri[m].alpha[0] for m in range(len(terms))], 0)
    assert oeis_compare("A001813", [int(Poly(c_rows[m].c)(0)) for m in range(len(terms))], 0)
    assert oeis_compare("A000369-col2", [tri[m].beta[0] for m in range(1, 6)], 1)
    assert [tri[m].beta[0] for m in range(1, 6)] == [1, 9, 111, 1785, 35595]
    _, q1 = fixtures.OEIS["A334907"]
    assert oeis_compare("A334907", [int(Poly(c_rows[m].c)(1)) for m in range(len(q1))], 0)
    announce["detail"] = f"A001813 ({len(terms)} terms), beta_(m,0) m=1..5, A334907 ({len(q1)} terms)"
