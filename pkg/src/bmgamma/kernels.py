"""Exact combinatorial primitives over Python ints and Fractions."""
from __future__ import annotations

import math
from fractions import Fraction

Rat = Fraction


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of negative number")
    return math.factorial(n)


def double_factorial_odd(m: int) -> int:
    """(2m-1)!! = 1*3*...*(2m-1); 1 for m = 0."""
    if m < 0:
        raise ValueError("m must be >= 0")
    out = 1
    for j in range(1, 2 * m, 2):
        out *= j
    return out


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero-extended outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def gen_binomial(r, k: int) -> Fraction:
    """Generalized binomial r(r-1)...(r-k+1)/k! for rational r."""
    if k < 0:
        raise ValueError("k must be >= 0")
    r = Fraction(r)
    num = Fraction(1)
    for j in range(k):
        num *= r - j
    return num / math.factorial(k)
