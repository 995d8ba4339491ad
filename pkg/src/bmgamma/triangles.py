"""The alpha/beta gamma-coefficient triangles of the Q_m symmetric split.

Three routes to the same numbers:

* ``build_triangle``: the parity-split integer recurrences,
* ``signed_sequence``: the coupled differential system for the signed
  polynomials alpha_m(x), beta_m(x),
* ``gamma_via_decomposition``: decompose Q_m and read off both gamma-vectors.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from bmgamma.boros_moll import q_poly
from bmgamma.gamma import GammaVector, gamma_vector
from bmgamma.kernels import factorial
from bmgamma.poly import Poly, one_plus_x_power
from bmgamma.symdecomp import SymDecomp, decompose


def alpha_len(m: int) -> int:
    return m // 2 + 1


def beta_len(m: int) -> int:
    return (m - 1) // 2 + 1


@dataclass(frozen=True)
class TriangleRow:
    m: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        if len(self.alpha) != alpha_len(self.m) or len(self.beta) != beta_len(self.m):
            raise ValueError(
                f"row {self.m}: expected lengths ({alpha_len(self.m)}, {beta_len(self.m)}), "
                f"got ({len(self.alpha)}, {len(self.beta)})"
            )


@dataclass(frozen=True)
class AlphaBetaTriangle:
    rows: tuple[TriangleRow, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, m: int) -> TriangleRow:
        return self.rows[m]

    @property
    def max_m(self) -> int:
        return len(self.rows) - 1

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "k", "alpha", "beta"])
        for row in self.rows:
            for k in range(max(len(row.alpha), len(row.beta))):
                a = str(row.alpha[k]) if k < len(row.alpha) else ""
                b = str(row.beta[k]) if k < len(row.beta) else ""
                w.writerow([row.m, k, a, b])
        return buf.getvalue()

    def to_json_obj(self) -> dict:
        return {
            "rows": [
                {"m": r.m, "alpha": [str(v) for v in r.alpha], "beta": [str(v) for v in r.beta]}
                for r in self.rows
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "AlphaBetaTriangle":
        return cls(
            tuple(
                TriangleRow(r["m"], tuple(int(v) for v in r["alpha"]), tuple(int(v) for v in r["beta"]))
                for r in obj["rows"]
            )
        )


def next_row(row: TriangleRow) -> TriangleRow:
    """One step of the parity-split recurrence, taking row m to row m+1."""
    m = row.m
    al, be = row.alpha, row.beta
    t = m // 2
    new_a = [0] * alpha_len(m + 1)
    new_b = [0] * beta_len(m + 1)
    new_a[0] = 2 * (2 * m + 1) * al[0]
    for k in range(1, t + 1):
        new_a[k] = 2 * (2 * m + 1 - k) * al[k] - (4 * k - 1) * be[k - 1]
    if m % 2 == 0:
        for k in range(t):
            new_b[k] = (1 + 4 * k) * al[k] + (4 * m + 2 * k + 3) * be[k]
        new_b[t] = (1 + 4 * t) * al[t]
    else:
        new_a[t + 1] = -(3 + 4 * t) * be[t]
        for k in range(t + 1):
            new_b[k] = (1 + 4 * k) * al[k] + (4 * m + 2 * k + 3) * be[k]
    return TriangleRow(m + 1, tuple(new_a), tuple(new_b))


def build_triangle(max_m: int) -> AlphaBetaTriangle:
    if max_m < 0:
        raise ValueError("max_m must be >= 0")
    row = TriangleRow(0, (1,), ())
    rows = [row]
    for _ in range(max_m):
        row = next_row(row)
        rows.append(row)
    return AlphaBetaTriangle(tuple(rows))


def iter_signed(max_m: int):
    """Yield (alpha_m(x), beta_m(x)) for m = 0..max_m from alpha_0 = 1, beta_0 = 0."""
    x = Poly.x()
    x2 = Poly((0, 0, 1))
    al, be = Poly.const(1), Poly()
    yield al, be
    for m in range(max_m):
        dal, dbe = al.derivative(), be.derivative()
        new_al = (4 * m + 2) * al - 2 * x * dal + 3 * x * be + 4 * x2 * dbe
        new_be = al + 4 * x * dal + (4 * m + 3) * be + 2 * x * dbe
        al, be = new_al, new_be
        yield al, be


def signed_sequence(max_m: int) -> list[tuple[Poly, Poly]]:
    if max_m < 0:
        raise ValueError("max_m must be >= 0")
    return list(iter_signed(max_m))


def unsign(p: Poly, length: int) -> tuple[int, ...]:
    """Coefficients of a signed polynomial mapped back to true-sign gammas, zero-padded."""
    return tuple((-1) ** k * int(p[k]) for k in range(length))


def gamma_of_decomposition(d: SymDecomp) -> tuple[GammaVector, GammaVector]:
    return gamma_vector(d.a, d.n), gamma_vector(d.b, d.n - 1)


def gamma_via_decomposition(m: int, q: Poly | None = None) -> tuple[GammaVector, GammaVector]:
    if q is None:
        q = q_poly(m)
    return gamma_of_decomposition(decompose(q, m))


def expand_row(row: TriangleRow) -> tuple[Poly, Poly]:
    """(a_m, b_m) rebuilt from gamma coefficients."""
    m = row.m
    a = [0] * (m + 1)
    for k, g in enumerate(row.alpha):
        for j, c in enumerate(one_plus_x_power(m - 2 * k)):
            a[k + j] += g * c
    b = [0] * max(m, 0)
    for k, g in enumerate(row.beta):
        for j, c in enumerate(one_plus_x_power(m - 1 - 2 * k)):
            b[k + j] += g * c
    return Poly(a), Poly(b)


def theorem21_reconstruct(m: int, row: TriangleRow | None = None) -> Poly:
    """P_m = (a_m + b_m) / (2^m m!) with a_m, b_m expanded from triangle row m."""
    if row is None:
        row = build_triangle(m)[m]
    a, b = expand_row(row)
    return (a + b) * Fraction(1, 2**m * factorial(m))


@dataclass
class IdentityReport:
    m: int
    ok: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def verify_lemma31(m: int, q_m: Poly | None = None, q_next: Poly | None = None) -> IdentityReport:
    """Check the two (1-x) a_{m+1}, (x-1) b_{m+1} identities and the reversed-Q recurrence.

    Both sides are compared in multiplied-out form, without division.
    """
    if q_m is None:
        q_m = q_poly(m)
    if q_next is None:
        q_next = q_poly(m + 1)
    cur, nxt = decompose(q_m, m), decompose(q_next, m + 1)
    a, b = cur.a, cur.b
    da, db = a.derivative(), b.derivative()
    x = Poly.x()
    one_px = Poly((1, 1))
    failures = []

    lhs_a = Poly((1, -1)) * nxt.a
    rhs_a = (
        -2 * one_px * Poly((-2 * m - 1, m + 1)) * a  # mx - 2m + x - 1
        - 2 * x * one_px**2 * da
        + x * Poly((-3, 4 * m - 1)) * b  # 4mx - x - 3
        - 4 * x**2 * one_px * db
    )
    if lhs_a != rhs_a:
        failures.append(f"a-identity: lhs={lhs_a} rhs={rhs_a} diff={lhs_a - rhs_a}")

    lhs_b = Poly((-1, 1)) * nxt.b
    rhs_b = (
        Poly((-1, 4 * m + 1)) * a  # 4mx + x - 1
        - 4 * x * one_px * da
        + Poly((-4 * m - 3, 6 * m + 1)) * one_px * b  # 6mx - 4m + x - 3
        - 2 * x * one_px**2 * db
    )
    if lhs_b != rhs_b:
        failures.append(f"b-identity: lhs={lhs_b} rhs={rhs_b} diff={lhs_b - rhs_b}")

    qt, qt_next = q_m.reverse(m), q_next.reverse(m + 1)
    rhs_t = Poly((4 * m + 3, 2 * m + 2)) * qt + Poly((0, 2, 2)) * qt.derivative()
    if qt_next != rhs_t:
        failures.append(f"reversed recurrence: lhs={qt_next} rhs={rhs_t}")
    if qt != a + b:
        failures.append("x^m Q_m(1/x) != a_m + b_m")
    return IdentityReport(m, not failures, failures)
