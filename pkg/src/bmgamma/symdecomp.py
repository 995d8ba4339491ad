"""Symmetric decomposition f = a + x b with a, b palindromic about n/2 and (n-1)/2."""
from __future__ import annotations

from dataclasses import dataclass

from bmgamma.errors import DegreeTooLarge
from bmgamma.poly import Poly


@dataclass(frozen=True)
class SymDecomp:
    a: Poly
    b: Poly
    n: int

    def check(self) -> None:
        if not self.a.is_symmetric(self.n):
            raise AssertionError(f"a is not symmetric about {self.n}/2: {self.a}")
        if not self.b.is_symmetric(self.n - 1):
            raise AssertionError(f"b is not symmetric about ({self.n}-1)/2: {self.b}")


def decompose(f: Poly, n: int) -> SymDecomp:
    """Split f (deg f <= n) as a + x b.

    a = (f - x^{n+1} f(1/x)) / (1 - x) and b = (x^n f(1/x) - f) / (1 - x) are
    computed separately and the recomposition is checked against f.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if f.degree > n:
        raise DegreeTooLarge(f"degree {f.degree} exceeds reference degree {n}")
    a = (f - f.reverse(n + 1)).div_exact_one_minus_x()
    b = (f.reverse(n) - f).div_exact_one_minus_x()
    out = SymDecomp(a, b, n)
    out.check()
    if recompose(out) != f:
        raise AssertionError("a + x b does not reproduce f")
    return out


def recompose(d: SymDecomp) -> Poly:
    return d.a + d.b.shift(1)
