"""Run every identity and property check over m = 0..M and collect a report."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from bmgamma import fixtures
from bmgamma.boros_moll import (
    integral_check,
    iter_c_rows,
    iter_d_rows,
    iter_q_ode,
    d_row_closed,
    q_special_values,
)
from bmgamma.errors import LengthExceedsFixture, MalformedLine, NonMonotoneIndex, UnknownSequence
from bmgamma.gamma import is_alternatingly_gamma_positive, signed_poly
from bmgamma.jacobi import specialization_check
from bmgamma.kernels import factorial
from bmgamma.poly import Poly
from bmgamma.props import is_alternatingly_increasing, is_spiral, is_unimodal
from bmgamma.symdecomp import decompose
from bmgamma.triangles import (
    build_triangle,
    gamma_of_decomposition,
    iter_signed,
    theorem21_reconstruct,
    unsign,
    verify_lemma31,
)


def bfile_parse(text: str) -> list[tuple[int, int]]:
    """Parse OEIS b-file text into (index, value) pairs with strictly increasing index."""
    out: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLine(lineno, raw)
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(lineno, raw) from None
        if out and idx <= out[-1][0]:
            raise NonMonotoneIndex(lineno, idx, out[-1][0])
        out.append((idx, val))
    return out


def fixture(sequence_id: str) -> tuple[int, tuple[int, ...]]:
    try:
        return fixtures.OEIS[sequence_id]
    except KeyError:
        raise UnknownSequence(sequence_id) from None


def oeis_compare(sequence_id: str, values: Iterable[int], offset: int = 0) -> bool:
    """True iff ``values`` equal the embedded terms with indices offset, offset+1, ..."""
    first, terms = fixture(sequence_id)
    values = list(values)
    start = offset - first
    if start < 0 or start + len(values) > len(terms):
        raise LengthExceedsFixture(
            f"{sequence_id} fixture covers indices {first}..{first + len(terms) - 1}, "
            f"requested {offset}..{offset + len(values) - 1}"
        )
    return list(terms[start:start + len(values)]) == values


def computed_sequence(sequence_id: str) -> Callable[[int], int] | None:
    """Generator for sequences this package can produce independently of the fixtures."""
    if sequence_id == "A001813":
        return lambda n: factorial(2 * n) // factorial(n)
    if sequence_id == "A334907":
        return lambda n: int(q_special_values(n).at1)
    if sequence_id == "A000369-col2":
        def beta0(n: int) -> int:
            return build_triangle(n)[n].beta[0]
        return beta0
    return None


@dataclass
class CheckResult:
    name: str
    range: str
    passed: bool
    counterexample: dict | None = None
    severity: str = "error"
    count: int = 0


@dataclass
class Report:
    max_m: int
    options: dict
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed and c.severity == "error"]

    @property
    def warnings(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed and c.severity == "warning"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json_obj(self) -> dict:
        return {
            "max_m": self.max_m,
            "options": self.options,
            "ok": self.ok,
            "checks": [asdict(c) for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    def to_text(self) -> str:
        lines = [f"verification suite, m <= {self.max_m}"]
        for c in self.checks:
            status = "PASS" if c.passed else ("WARN" if c.severity == "warning" else "FAIL")
            lines.append(f"  [{status}] {c.name} ({c.range}, {c.count} cases)")
            if c.counterexample is not None:
                lines.append(f"         first counterexample: {c.counterexample}")
        n_fail, n_warn = len(self.failures), len(self.warnings)
        lines.append(f"{len(self.checks)} checks, {n_fail} failed, {n_warn} warnings")
        return "\n".join(lines)


def _s(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def _cx(m, k=None, expected=None, got=None, **extra) -> dict:
    out = {"m": m}
    if k is not None:
        out["k"] = k
    if expected is not None:
        out["expected"] = _s(expected)
    if got is not None:
        out["got"] = _s(got)
    out.update({key: _s(v) for key, v in extra.items()})
    return out


def _vec_diff(m, expected, got) -> dict | None:
    for k in range(max(len(expected), len(got))):
        e = expected[k] if k < len(expected) else None
        g = got[k] if k < len(got) else None
        if e != g:
            return _cx(m, k, e, g)
    return None


class _Collector:
    def __init__(self, report: Report):
        self.report = report

    def run(self, name: str, rng: str, cases: Iterator[dict | None], severity: str = "error") -> CheckResult:
        """Consume ``cases`` (None = pass, dict = counterexample) and keep the first failure."""
        res = CheckResult(name, rng, True, severity=severity)
        for cx in cases:
            res.count += 1
            if cx is not None and res.passed:
                res.passed = False
                res.counterexample = cx
        self.report.checks.append(res)
        return res


def run_suite(
    max_m: int,
    strict_gamma: bool = False,
    quadrature: bool = False,
    closed_max: int = 200,
    lemma31_max: int = 50,
    reconstruct_max: int = 200,
    jacobi_max: int = 50,
) -> Report:
    """Check every route and structural property for 0 <= m <= max_m.

    The costlier checks are capped (``closed_max`` etc.) independently of
    ``max_m``. Failures never raise; they are recorded with the first
    counterexample.
    """
    if max_m < 0:
        raise ValueError("max_m must be >= 0")
    M = max_m
    report = Report(M, {
        "strict_gamma": strict_gamma, "quadrature": quadrature, "closed_max": closed_max,
        "lemma31_max": lemma31_max, "reconstruct_max": reconstruct_max, "jacobi_max": jacobi_max,
    })
    col = _Collector(report)

    d_rows = list(iter_d_rows(M))
    c_rows = list(iter_c_rows(M))
    q_odes = list(iter_q_ode(M))
    tri = build_triangle(M)
    signed = list(iter_signed(M))
    p_polys = [Poly(r.d) for r in d_rows]
    q_polys = [Poly(r.c) for r in c_rows]
    decomps = [decompose(q_polys[m], m) for m in range(M + 1)]
    gammas = [gamma_of_decomposition(d) for d in decomps]

    # golden tables
    g = min(M, 5)

    def golden_p5():
        if M >= 5:
            yield _vec_diff(5, list(fixtures.P5), list(d_rows[5].d))

    col.run("golden: P_5 coefficients", "m=5" if M >= 5 else "skipped (M<5)", golden_p5())

    def golden_decomp():
        for m in range(1, g + 1):
            a, b = fixtures.golden_decomposition(m)
            if (a, b) != (decomps[m].a, decomps[m].b):
                yield _cx(m, expected=f"a={a}; b={b}", got=f"a={decomps[m].a}; b={decomps[m].b}")
            else:
                yield None

    col.run("golden: symmetric decompositions of Q_1..Q_5", f"1<=m<={g}", golden_decomp())

    def golden_signed():
        for m in range(g + 1):
            ea, eb = fixtures.SIGNED[m]
            al, be = signed[m]
            yield _vec_diff(m, [Fraction(v) for v in ea], list(al.coeffs)) or \
                _vec_diff(m, [Fraction(v) for v in eb], list(be.coeffs))

    col.run("golden: signed alpha_m(x), beta_m(x) list", f"0<=m<={g}", golden_signed())

    # route equivalences
    cm = min(M, closed_max)
    col.run("d-recurrence = closed binomial sum", f"m<={cm}",
            (_vec_diff(m, list(d_row_closed(m).d), list(d_rows[m].d)) for m in range(cm + 1)))

    def q_routes():
        for m in range(M + 1):
            via_p = p_polys[m].reverse(m) * (2**m * factorial(m))
            if not (q_polys[m] == q_odes[m] == via_p):
                yield _cx(m, expected=q_polys[m], got=f"ode={q_odes[m]}; via_p={via_p}")
            else:
                yield None

    col.run("Q_m: c-recurrence = differential recurrence = scaled reversal of P_m", f"m<={M}", q_routes())

    def c_vs_d():
        for m in range(M + 1):
            scale = 2**m * factorial(m)
            d = d_rows[m].d
            yield _vec_diff(m, [scale * d[m - i] for i in range(m + 1)], [Fraction(c) for c in c_rows[m].c])

    col.run("c_i(m) = 2^m m! d_{m-i}(m)", f"m<={M}", c_vs_d())

    def special():
        for m in range(M + 1):
            sv = q_special_values(m)
            q = q_polys[m]
            got = (q(0), q(1), q(-1))
            if got != (sv.at0, sv.at1, sv.atm1):
                yield _cx(m, expected=(sv.at0, sv.at1, sv.atm1), got=got)
            else:
                yield None

    col.run("closed values Q_m(0), Q_m(1), Q_m(-1)", f"m<={M}", special())

    def positivity():
        for m in range(M + 1):
            bad = next((i for i, v in enumerate(d_rows[m].d) if v <= 0), None)
            if bad is None:
                bad = next((i for i, v in enumerate(c_rows[m].c) if v <= 0), None)
            yield None if bad is None else _cx(m, bad)

    col.run("positivity of d_i(m) and c_i(m)", f"m<={M}", positivity())

    def mode_middle():
        for m in range(M + 1):
            ok, mode = is_unimodal(p_polys[m])
            yield None if ok and mode in (m // 2, (m + 1) // 2) else _cx(m, got=f"unimodal={ok}, mode={mode}")

    col.run("P_m unimodal with mode in {floor(m/2), ceil(m/2)}", f"m<={M}", mode_middle(), severity="warning")

    # shape properties
    col.run("P_m spiral", f"m<={M}",
            (None if is_spiral(p_polys[m]) else _cx(m) for m in range(M + 1)))
    col.run("Q_m alternatingly increasing", f"m<={M}",
            (None if is_alternatingly_increasing(q_polys[m]) else _cx(m) for m in range(M + 1)))

    def components_unimodal():
        for m in range(1, M + 1):
            ua, _ = is_unimodal(decomps[m].a)
            ub, _ = is_unimodal(decomps[m].b)
            yield None if ua and ub else _cx(m, got=f"a unimodal={ua}, b unimodal={ub}")

    col.run("a_m, b_m unimodal", f"1<=m<={M}", components_unimodal())

    def decomp_shape():
        for m in range(M + 1):
            a, b = decomps[m].a, decomps[m].b
            want_b = m - 1
            if a.degree != m or b.degree != want_b:
                yield _cx(m, expected=f"deg a={m}, deg b={want_b}", got=f"deg a={a.degree}, deg b={b.degree}")
            elif not (a.is_integral() and b.is_integral()) or any(c <= 0 for c in a.coeffs + b.coeffs):
                yield _cx(m, got="non-integer or non-positive coefficient in a_m or b_m")
            else:
                yield None

    col.run("deg a_m = m, deg b_m = m-1, positive integer coefficients", f"m<={M}", decomp_shape())

    # triangle routes
    def triple_route():
        for m in range(M + 1):
            row = tri[m]
            ga, gb = gammas[m]
            al, be = signed[m]
            if not (ga.is_integral() and gb.is_integral()):
                yield _cx(m, got="non-integer gamma entry")
                continue
            yield (_vec_diff(m, list(row.alpha), ga.ints())
                   or _vec_diff(m, list(row.beta), gb.ints())
                   or _vec_diff(m, list(row.alpha), list(unsign(al, len(row.alpha))))
                   or _vec_diff(m, list(row.beta), list(unsign(be, len(row.beta))))
                   or (None if al.degree < len(row.alpha) and be.degree < len(row.beta)
                       else _cx(m, got="signed polynomial longer than triangle row")))

    col.run("triangle recurrence = gamma of decomposition = signed system", f"m<={M}", triple_route())

    def sign_law():
        for m in range(1, M + 1):
            row = tri[m]
            bad = next((("alpha", k) for k, v in enumerate(row.alpha) if not (-1) ** k * v > 0), None) or \
                next((("beta", k) for k, v in enumerate(row.beta) if not (-1) ** k * v > 0), None)
            if bad and strict_gamma:
                yield _cx(m, bad[1], which=bad[0])
                continue
            ga, gb = gammas[m]
            if not (is_alternatingly_gamma_positive(ga, strict_gamma)
                    and is_alternatingly_gamma_positive(gb, strict_gamma)):
                yield _cx(m, got="gamma-vector of a_m or b_m not alternating")
            else:
                yield None

    col.run(f"alternating bi-gamma-positivity ({'strict' if strict_gamma else 'weak'})", f"1<=m<={M}", sign_law())

    def signed_positive():
        for m in range(1, M + 1):
            al, be = signed[m]
            yield None if all(c > 0 for c in al.coeffs + be.coeffs) else _cx(m)

    col.run("signed polynomials have positive coefficients", f"1<=m<={M}", signed_positive())

    col.run("alpha_{m,0} = (2m)!/m!", f"m<={M}",
            (_vec_diff(m, [factorial(2 * m) // factorial(m)], [tri[m].alpha[0]]) for m in range(M + 1)))

    col.run("signed_poly(gamma(a_m)) = alpha_m(x)", f"m<={M}",
            (None if signed_poly(gammas[m][0]) == signed[m][0] else _cx(m) for m in range(M + 1)))

    lm = min(M - 1, lemma31_max)

    def lemma31():
        for m in range(lm + 1):
            rep = verify_lemma31(m, q_polys[m], q_polys[m + 1])
            yield None if rep.ok else _cx(m, got="; ".join(rep.failures))

    col.run("a/b step identities and reversed-Q recurrence", f"m<={lm}", lemma31())

    rm = min(M, reconstruct_max)
    col.run("P_m rebuilt from gamma expansion", f"m<={rm}",
            (None if theorem21_reconstruct(m, tri[m]) == p_polys[m] else _cx(m) for m in range(rm + 1)))

    jm = min(M, jacobi_max)
    col.run("Jacobi(m+1/2, -(m+1/2)) = P_m", f"m<={jm}",
            (None if specialization_check(m) else _cx(m) for m in range(jm + 1)))

    # OEIS fixtures
    def oeis_checks():
        first, terms = fixtures.OEIS["A001813"]
        n = min(M + 1, len(terms))
        yield None if oeis_compare("A001813", [tri[m].alpha[0] for m in range(n)], 0) else _cx(n - 1, got="alpha_{m,0}")
        yield None if oeis_compare("A001813", [int(q_polys[m](0)) for m in range(n)], 0) else _cx(n - 1, got="Q_m(0)")
        first, terms = fixtures.OEIS["A334907"]
        n = min(M + 1, len(terms))
        yield None if oeis_compare("A334907", [int(q_polys[m](1)) for m in range(n)], 0) else _cx(n - 1, got="Q_m(1)")
        first, terms = fixtures.OEIS["A000369-col2"]
        n = min(M, len(terms))
        if n >= 1:
            yield None if oeis_compare("A000369-col2", [tri[m].beta[0] for m in range(1, n + 1)], 1) \
                else _cx(n, got="beta_{m,0}")

    col.run("OEIS fixtures (A001813, A334907, A000369 column)", "embedded prefixes", oeis_checks())

    if quadrature:
        def quad():
            for m in range(min(M, 5) + 1):
                for x in (0.0, 0.5, 1.0, 3.0):
                    r = integral_check(m, x, 1e-8)
                    yield None if r.ok else _cx(m, x=x, lhs=repr(r.lhs), rhs=repr(r.rhs))

        col.run("quartic integral vs closed form (rel 1e-8)", f"m<={min(M, 5)}", quad())

    return report
