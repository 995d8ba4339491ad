"""Dense univariate polynomials with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from bmgamma.errors import DegreeTooLarge, NotDivisible

_ZERO = Fraction(0)


def _as_rat(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c)
    if isinstance(c, float):
        raise TypeError("float coefficients are not exact; pass int, Fraction or 'p/q'")
    return Fraction(c)


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of x^i.

    The stored tuple never has a trailing zero, so the zero polynomial is the
    empty tuple and its degree is reported as -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _trusted(cls, cs: list) -> "Poly":
        # cs: list of Fraction, may carry trailing zeros
        while cs and cs[-1] == 0:
            cs.pop()
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(cs))
        return p

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return _ZERO

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # ring operations

    def __add__(self, other) -> "Poly":
        other = _lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._trusted(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._trusted([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly._trusted([c * other for c in self.coeffs])
        other = _lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly._trusted(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        out, base = Poly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly._trusted([_ZERO] * k + list(self.coeffs))

    def derivative(self) -> "Poly":
        return Poly._trusted([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x0) -> Fraction:
        x0 = _as_rat(x0)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    evaluate = __call__

    def reverse(self, n: int) -> "Poly":
        """x^n f(1/x)."""
        if self.degree > n:
            raise DegreeTooLarge(f"degree {self.degree} exceeds reference degree {n}")
        padded = list(self.coeffs) + [_ZERO] * (n + 1 - len(self.coeffs))
        return Poly._trusted(padded[::-1])

    def div_exact_one_minus_x(self) -> "Poly":
        """Quotient q with (1 - x) q = f; raises NotDivisible unless f(1) = 0."""
        cs = self.coeffs
        if not cs:
            return Poly()
        # f = (1 - x) q  =>  q_i = f_0 + ... + f_i, and the full sum must vanish
        q = []
        acc = _ZERO
        for c in cs:
            acc += c
            q.append(acc)
        if q.pop() != 0:
            raise NotDivisible(f"f(1) = {acc} != 0, so 1 - x does not divide f")
        out = Poly._trusted(q)
        if out * Poly((1, -1)) != self:
            raise NotDivisible("remainder check failed")
        return out

    def is_symmetric(self, n: int) -> bool:
        if self.degree > n:
            raise DegreeTooLarge(f"degree {self.degree} exceeds reference degree {n}")
        return all(self[i] == self[n - i] for i in range(n // 2 + 1))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    # rendering

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return " + ".join(terms)

    def to_json(self) -> list[str]:
        return [rat_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(Fraction(s) for s in data)


def rat_str(c: Fraction) -> str:
    """Always "p/q", including q = 1, so machine formats have one shape."""
    return f"{c.numerator}/{c.denominator}"


def _lift(other):
    if isinstance(other, Poly):
        return other
    if isinstance(other, (int, Fraction)):
        return Poly.const(other)
    return NotImplemented


def add(f: Poly, g: Poly) -> Poly:
    return f + g


def mul(f: Poly, g: Poly) -> Poly:
    return f * g


def derivative(f: Poly) -> Poly:
    return f.derivative()


def evaluate(f: Poly, x0) -> Fraction:
    return f(x0)


def reverse(f: Poly, n: int) -> Poly:
    return f.reverse(n)


def div_exact_one_minus_x(f: Poly) -> Poly:
    return f.div_exact_one_minus_x()


def is_symmetric(f: Poly, n: int) -> bool:
    return f.is_symmetric(n)


def one_plus_x_power(n: int) -> list[int]:
    """Integer coefficients of (1 + x)^n."""
    row = [1] * (n + 1)
    for j in range(n):
        row[j + 1] = row[j] * (n - j) // (j + 1)
    return row
