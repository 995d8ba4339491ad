"""Order-shape predicates on coefficient sequences (exact comparisons)."""
from __future__ import annotations

from bmgamma.errors import EmptyPolynomial, PreconditionDegree
from bmgamma.poly import Poly
from bmgamma.symdecomp import decompose


def _coeffs(f: Poly):
    if f.is_zero():
        raise EmptyPolynomial("shape predicates are undefined for the zero polynomial")
    return f.coeffs


def is_unimodal(f: Poly) -> tuple[bool, int]:
    """Weakly rising then weakly falling; mode is the first index of the maximum."""
    cs = _coeffs(f)
    top = max(cs)
    mode = cs.index(top)
    i, n = 0, len(cs)
    while i + 1 < n and cs[i] <= cs[i + 1]:
        i += 1
    while i + 1 < n and cs[i] >= cs[i + 1]:
        i += 1
    return i == n - 1, mode


def _chain(cs, order) -> bool:
    vals = [cs[i] for i in order]
    return all(u <= v for u, v in zip(vals, vals[1:]))


def _interleave(n: int, high_first: bool) -> list[int]:
    lo, hi = 0, n
    out = []
    take_hi = high_first
    while len(out) < n + 1:
        if take_hi:
            out.append(hi)
            hi -= 1
        else:
            out.append(lo)
            lo += 1
        take_hi = not take_hi
    return out


def is_spiral(f: Poly) -> bool:
    """f_n <= f_0 <= f_{n-1} <= f_1 <= ... <= f_{n//2}."""
    cs = _coeffs(f)
    return _chain(cs, _interleave(len(cs) - 1, high_first=True))


def is_alternatingly_increasing(f: Poly) -> bool:
    """f_0 <= f_n <= f_1 <= f_{n-1} <= ... <= f_{(n+1)//2}."""
    cs = _coeffs(f)
    return _chain(cs, _interleave(len(cs) - 1, high_first=False))


def beck_equivalence(f: Poly) -> tuple[bool, bool]:
    """(f alternatingly increasing, both parts of its symmetric split unimodal and nonnegative).

    Only meaningful when f(0) != 0, deg a = n and deg b = n - 1. Nonnegativity
    of the parts is required: f = 2 + x splits as a = 2 + 2x, b = -1, both
    trivially unimodal, yet f is not alternatingly increasing.
    """
    _coeffs(f)
    n = f.degree
    if f[0] == 0:
        raise PreconditionDegree("f(0) must be nonzero")
    d = decompose(f, n)
    if d.a.degree != n or d.b.degree != n - 1 or n < 1:
        raise PreconditionDegree(f"need deg a = {n}, deg b = {n - 1}; got {d.a.degree}, {d.b.degree}")
    lhs = is_alternatingly_increasing(f)
    rhs = all(
        is_unimodal(part)[0] and all(c >= 0 for c in part.coeffs) for part in (d.a, d.b)
    )
    return lhs, rhs
