"""Exact Jacobi polynomials and a parameter-grid scan for alternating bi-gamma-positivity."""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from bmgamma.boros_moll import p_poly
from bmgamma.gamma import Classification, classify, gamma_vector
from bmgamma.kernels import gen_binomial
from bmgamma.poly import Poly, rat_str
from bmgamma.symdecomp import decompose

TRANSFORMS = ("raw", "reversed")


def jacobi_poly(m: int, alpha, beta) -> Poly:
    """sum_k (-1)^{m-k} C(m+beta, m-k) C(m+k+alpha+beta, k) ((1+x)/2)^k, expanded in x."""
    if m < 0:
        raise ValueError("m must be >= 0")
    alpha, beta = Fraction(alpha), Fraction(beta)
    out = [Fraction(0)] * (m + 1)
    for k in range(m + 1):
        w = gen_binomial(m + beta, m - k) * gen_binomial(m + k + alpha + beta, k)
        if not w:
            continue
        if (m - k) % 2:
            w = -w
        w /= 2**k
        # (1+x)^k
        c = 1
        for j in range(k + 1):
            out[j] += w * c
            c = c * (k - j) // (j + 1)
    return Poly(out)


def boros_moll_parameters(m: int) -> tuple[Fraction, Fraction]:
    a = Fraction(2 * m + 1, 2)
    return a, -a


def specialization_check(m: int) -> bool:
    return jacobi_poly(m, *boros_moll_parameters(m)) == p_poly(m)


def _rat(s) -> Fraction:
    return Fraction(s) if not isinstance(s, Fraction) else s


@dataclass(frozen=True)
class GridSpec:
    alpha_start: Fraction
    alpha_step: Fraction
    alpha_count: int
    beta_start: Fraction
    beta_step: Fraction
    beta_count: int
    m_min: int
    m_max: int

    def __post_init__(self):
        for name in ("alpha_start", "alpha_step", "beta_start", "beta_step"):
            object.__setattr__(self, name, _rat(getattr(self, name)))
        if self.alpha_count < 1 or self.beta_count < 1:
            raise ValueError("grid counts must be >= 1")
        if self.alpha_count > 1 and self.alpha_step == 0:
            raise ValueError("alpha_step must be nonzero when alpha_count > 1")
        if self.beta_count > 1 and self.beta_step == 0:
            raise ValueError("beta_step must be nonzero when beta_count > 1")
        if self.m_min < 0 or self.m_min > self.m_max:
            raise ValueError(f"invalid m range {self.m_min}:{self.m_max}")

    @classmethod
    def parse(cls, alpha: str, beta: str, m: str) -> "GridSpec":
        """From strings "START:STEP:COUNT" (rationals allowed) and "MIN:MAX"."""
        a0, da, na = _split(alpha, 3, "alpha")
        b0, db, nb = _split(beta, 3, "beta")
        lo, hi = _split(m, 2, "m")
        return cls(Fraction(a0), Fraction(da), int(na), Fraction(b0), Fraction(db), int(nb), int(lo), int(hi))

    def alphas(self) -> list[Fraction]:
        return [self.alpha_start + i * self.alpha_step for i in range(self.alpha_count)]

    def betas(self) -> list[Fraction]:
        return [self.beta_start + i * self.beta_step for i in range(self.beta_count)]

    def points(self) -> Iterator[tuple[int, Fraction, Fraction]]:
        for m in range(self.m_min, self.m_max + 1):
            for a in self.alphas():
                for b in self.betas():
                    yield m, a, b

    def __len__(self) -> int:
        return (self.m_max - self.m_min + 1) * self.alpha_count * self.beta_count


def _split(text: str, parts: int, name: str) -> list[str]:
    fields = text.split(":")
    if len(fields) != parts:
        raise ValueError(f"{name} must have {parts} ':'-separated fields, got {text!r}")
    return fields


@dataclass(frozen=True)
class ClassificationRecord:
    m: int
    alpha: Fraction
    beta: Fraction
    transform: str
    a_class: Classification | None
    b_class: Classification | None
    a_gamma: tuple[Fraction, ...] = ()
    b_gamma: tuple[Fraction, ...] = ()
    flags: tuple[str, ...] = field(default_factory=tuple)

    @property
    def degenerate(self) -> bool:
        return bool(self.flags)

    @property
    def alternatingly_bi_gamma_positive(self) -> bool:
        ok = (Classification.ALTERNATINGLY_GAMMA_POSITIVE, Classification.BOTH)
        return self.a_class in ok and self.b_class in ok

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "alpha": rat_str(self.alpha),
            "beta": rat_str(self.beta),
            "transform": self.transform,
            "a_class": self.a_class.value if self.a_class else None,
            "b_class": self.b_class.value if self.b_class else None,
            "a_gamma": [rat_str(g) for g in self.a_gamma],
            "b_gamma": [rat_str(g) for g in self.b_gamma],
            "alt_bi_gamma_positive": self.alternatingly_bi_gamma_positive,
            "degenerate": self.degenerate,
            "flags": list(self.flags),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def classify_point(m: int, alpha, beta, transform: str = "reversed", strict: bool = False) -> ClassificationRecord:
    if transform not in TRANSFORMS:
        raise ValueError(f"transform must be one of {TRANSFORMS}")
    alpha, beta = Fraction(alpha), Fraction(beta)
    f = jacobi_poly(m, alpha, beta)
    if f.is_zero():
        return ClassificationRecord(m, alpha, beta, transform, None, None, flags=("zero_polynomial",))
    flags = []
    if f.degree < m:
        flags.append("degree_drop")
    if transform == "reversed":
        f = f.reverse(m)
    if f[0] == 0:
        flags.append("zero_constant_term")
    d = decompose(f, m)
    ga, gb = gamma_vector(d.a, m), gamma_vector(d.b, m - 1)
    return ClassificationRecord(
        m, alpha, beta, transform,
        classify(ga, strict), classify(gb, strict),
        ga.gammas, gb.gammas, tuple(flags),
    )


def _classify_args(args) -> ClassificationRecord:
    return classify_point(*args)


def scan(spec: GridSpec, transform: str = "reversed", strict: bool = False,
         workers: int = 1) -> Iterator[ClassificationRecord]:
    """Records in m-major, then alpha, then beta order, independent of ``workers``."""
    jobs = ((m, a, b, transform, strict) for m, a, b in spec.points())
    if workers <= 1:
        for job in jobs:
            yield _classify_args(job)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_classify_args, jobs, chunksize=8)


def scan_csv_header() -> list[str]:
    return ["m", "alpha", "beta", "transform", "a_class", "b_class", "alt_bi_gamma_positive", "degenerate", "flags"]


def scan_csv_row(rec: ClassificationRecord) -> list[str]:
    d = rec.to_dict()
    return [
        str(d["m"]), d["alpha"], d["beta"], d["transform"],
        d["a_class"] or "", d["b_class"] or "",
        str(d["alt_bi_gamma_positive"]).lower(), str(d["degenerate"]).lower(), ";".join(d["flags"]),
    ]
