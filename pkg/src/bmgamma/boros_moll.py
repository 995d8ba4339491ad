"""Boros-Moll polynomials P_m and their integer reversals Q_m.

Three independent routes are provided:

* the rational triangle recurrence for d_i(m) (canonical producer),
* the closed binomial sum for d_i(m) (oracle),
* the integer recurrence for c_i(m) and the differential recurrence for Q_m.

``Q_m(x) = 2^m m! x^m P_m(1/x)``, so ``c_i(m) = 2^m m! d_{m-i}(m)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from scipy import integrate

from bmgamma.errors import QuadratureNonConvergence
from bmgamma.kernels import binomial, double_factorial_odd, factorial
from bmgamma.poly import Poly


@dataclass(frozen=True)
class DRow:
    m: int
    d: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.d) != self.m + 1:
            raise ValueError(f"d row for m={self.m} must have {self.m + 1} entries")


@dataclass(frozen=True)
class CRow:
    m: int
    c: tuple[int, ...]

    def __post_init__(self):
        if len(self.c) != self.m + 1:
            raise ValueError(f"c row for m={self.m} must have {self.m + 1} entries")


def iter_d_rows(max_m: int) -> Iterator[DRow]:
    """Rows m = 0..max_m of 2(m+1) d_i(m+1) = 2(m+i) d_{i-1}(m) + (4m+2i+3) d_i(m)."""
    d = [Fraction(1)]
    yield DRow(0, tuple(d))
    for m in range(max_m):
        ext = [Fraction(0)] + d + [Fraction(0)]  # ext[i+1] = d_i(m), zero outside 0..m
        den = 2 * (m + 1)
        d = [(2 * (m + i) * ext[i] + (4 * m + 2 * i + 3) * ext[i + 1]) / den for i in range(m + 2)]
        yield DRow(m + 1, tuple(d))


def d_row_recurrence(m: int) -> DRow:
    if m < 0:
        raise ValueError("m must be >= 0")
    for row in iter_d_rows(m):
        pass
    return row


def d_row_closed(m: int) -> DRow:
    """d_i(m) = 2^{-2m} sum_{k=i}^m 2^k C(2m-2k, m-k) C(m+k, k) C(k, i)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    terms = [2**k * binomial(2 * m - 2 * k, m - k) * binomial(m + k, k) for k in range(m + 1)]
    scale = 4**m
    d = tuple(
        Fraction(sum(terms[k] * binomial(k, i) for k in range(i, m + 1)), scale)
        for i in range(m + 1)
    )
    return DRow(m, d)


def p_poly(m: int) -> Poly:
    return Poly(d_row_recurrence(m).d)


def iter_c_rows(max_m: int) -> Iterator[CRow]:
    """Rows of c_i(m+1) = (4m-2i+2) c_i(m) + (6m-2i+5) c_{i-1}(m), c_0(0) = 1."""
    c = [1]
    yield CRow(0, tuple(c))
    for m in range(max_m):
        ext = [0] + c + [0]  # ext[i+1] = c_i(m)
        c = [(4 * m - 2 * i + 2) * ext[i + 1] + (6 * m - 2 * i + 5) * ext[i] for i in range(m + 2)]
        yield CRow(m + 1, tuple(c))


def c_row(m: int) -> CRow:
    if m < 0:
        raise ValueError("m must be >= 0")
    for row in iter_c_rows(m):
        pass
    return row


def q_poly(m: int) -> Poly:
    return Poly(c_row(m).c)


def iter_q_ode(max_m: int) -> Iterator[Poly]:
    """Q_{m+1} = (2m+1)(2+3x) Q_m - 2x(1+x) Q_m',  Q_0 = 1."""
    q = Poly.const(1)
    yield q
    two_plus_3x = Poly((2, 3))
    two_x_one_plus_x = Poly((0, 2, 2))
    for m in range(max_m):
        q = (2 * m + 1) * two_plus_3x * q - two_x_one_plus_x * q.derivative()
        yield q


def q_poly_ode(m: int) -> Poly:
    if m < 0:
        raise ValueError("m must be >= 0")
    for q in iter_q_ode(m):
        pass
    return q


def q_from_p(m: int, p: Poly | None = None) -> Poly:
    """2^m m! x^m P_m(1/x), the rational route to Q_m."""
    if p is None:
        p = p_poly(m)
    return p.reverse(m) * (2**m * factorial(m))


@dataclass(frozen=True)
class SpecialValues:
    at0: int
    at1: Fraction
    atm1: int


def q_special_values(m: int) -> SpecialValues:
    """Closed forms for Q_m at 0, 1 and -1, computed without touching Q_m."""
    if m < 0:
        raise ValueError("m must be >= 0")
    at0 = factorial(2 * m) // factorial(m)
    at1 = Fraction(factorial(m), 2 ** (m + 1)) * binomial(4 * m + 2, 2 * m + 1)
    atm1 = (-1) ** m * double_factorial_odd(m)
    return SpecialValues(at0, at1, atm1)


@dataclass(frozen=True)
class IntegralCheck:
    lhs: float
    rhs: float
    ok: bool


def integral_rhs(m: int, x: float, p: Poly | None = None) -> float:
    if p is None:
        p = p_poly(m)
    px = float(p(Fraction(x)))
    return math.pi / (2 ** (m + 1.5) * (x + 1) ** (m + 0.5)) * px


def integral_lhs(m: int, x: float, epsrel: float = 1e-12) -> float:
    """int_0^inf dy / (1 + 2 x y^2 + y^4)^{m+1} by adaptive quadrature after y = t/(1-t)."""
    power = m + 1

    def integrand(t: float) -> float:
        if t >= 1.0:
            return 0.0
        s = 1.0 - t
        y = t / s
        y2 = y * y
        # invert before raising to the power so large y underflows rather than overflows
        base = 1.0 / (1.0 + 2.0 * x * y2 + y2 * y2)
        return base**power / (s * s)

    out = integrate.quad(integrand, 0.0, 1.0, epsabs=0.0, epsrel=epsrel, limit=200, full_output=True)
    value, abserr = out[0], out[1]
    # quad appends a warning message only when it failed to converge
    if len(out) > 3:
        raise QuadratureNonConvergence(f"quad did not converge for m={m}, x={x}: {out[3]}")
    if not math.isfinite(value):
        raise QuadratureNonConvergence(f"non-finite integral for m={m}, x={x}")
    return value


def integral_check(m: int, x: float, rel_tol: float = 1e-8) -> IntegralCheck:
    if not x > -1:
        raise ValueError("x must exceed -1")
    if not rel_tol > 0:
        raise ValueError("rel_tol must be positive")
    lhs = integral_lhs(m, x)
    rhs = integral_rhs(m, x)
    return IntegralCheck(lhs, rhs, abs(lhs - rhs) <= rel_tol * abs(rhs))
