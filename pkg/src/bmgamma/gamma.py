"""Gamma-vectors: coordinates of a palindromic polynomial in the basis x^k (1+x)^{n-2k}."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from bmgamma.errors import DegreeTooLarge, InternalResidue, NotSymmetric
from bmgamma.poly import Poly, one_plus_x_power


class Classification(str, enum.Enum):
    GAMMA_POSITIVE = "GammaPositive"
    ALTERNATINGLY_GAMMA_POSITIVE = "AlternatinglyGammaPositive"
    NEITHER = "Neither"
    BOTH = "Both"


@dataclass(frozen=True)
class GammaVector:
    """``gammas[k]`` multiplies x^k (1+x)^{n-2k}; length is always n//2 + 1.

    n = -1 is allowed and gives the empty vector (the b part of a degree-0 split).
    """

    gammas: tuple[Fraction, ...]
    n: int

    def __post_init__(self):
        if self.n < -1:
            raise ValueError("n must be >= -1")
        if len(self.gammas) != self.n // 2 + 1:
            raise ValueError(f"gamma vector for n={self.n} needs {self.n // 2 + 1} entries, got {len(self.gammas)}")

    def __len__(self) -> int:
        return len(self.gammas)

    def __getitem__(self, k: int) -> Fraction:
        return self.gammas[k]

    def is_integral(self) -> bool:
        return all(g.denominator == 1 for g in self.gammas)

    def ints(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("gamma vector has non-integer entries")
        return [g.numerator for g in self.gammas]


def gamma_vector(f: Poly, n: int) -> GammaVector:
    """Peel off gamma_k = [x^k] remainder, k = 0, 1, ..., n//2."""
    if n < -1:
        raise ValueError("n must be >= -1")
    if f.degree > n:
        raise DegreeTooLarge(f"degree {f.degree} exceeds reference degree {n}")
    if n == -1:
        return GammaVector((), -1)
    if not f.is_symmetric(n):
        raise NotSymmetric(f"polynomial is not symmetric about {n}/2")
    integral = f.is_integral()
    rem = [f[i] for i in range(n + 1)]
    if integral:
        # plain int arithmetic is several times faster than Fraction for big Q_m
        rem = [c.numerator for c in rem]
    gammas = []
    for k in range(n // 2 + 1):
        g = rem[k]
        gammas.append(g)
        if not g:
            continue
        for j, c in enumerate(one_plus_x_power(n - 2 * k)):
            rem[k + j] -= g * c
    if any(rem):
        raise InternalResidue(f"nonzero remainder after peeling: {rem}")
    return GammaVector(tuple(Fraction(g) for g in gammas), n)


def from_gamma(gv: GammaVector) -> Poly:
    n = gv.n
    out = [Fraction(0)] * (n + 1)
    for k, g in enumerate(gv.gammas):
        if not g:
            continue
        for j, c in enumerate(one_plus_x_power(n - 2 * k)):
            out[k + j] += g * c
    return Poly(out)


def classify(gv: GammaVector, strict: bool = False) -> Classification:
    """Sign pattern of a gamma-vector.

    Non-strict: zeros are compatible with either pattern. Strict: every entry up
    to the last nonzero one must have the required sign and be nonzero.
    """
    gs = gv.gammas
    last = max((k for k, g in enumerate(gs) if g), default=-1)
    if strict:
        pos = all(g > 0 for g in gs[: last + 1])
        alt = all((-1) ** k * g > 0 for k, g in enumerate(gs[: last + 1]))
    else:
        pos = all(g >= 0 for g in gs)
        alt = all((-1) ** k * g >= 0 for k, g in enumerate(gs))
    if pos and alt:
        return Classification.BOTH
    if pos:
        return Classification.GAMMA_POSITIVE
    if alt:
        return Classification.ALTERNATINGLY_GAMMA_POSITIVE
    return Classification.NEITHER


def is_alternatingly_gamma_positive(gv: GammaVector, strict: bool = False) -> bool:
    return classify(gv, strict) in (Classification.ALTERNATINGLY_GAMMA_POSITIVE, Classification.BOTH)


def signed_poly(gv: GammaVector) -> Poly:
    """sum_k (-1)^k gamma_k x^k."""
    return Poly((-g if k % 2 else g) for k, g in enumerate(gv.gammas))
