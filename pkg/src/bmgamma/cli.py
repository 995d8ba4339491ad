"""Command-line interface: ``bmgamma <subcommand> ...``."""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path

from bmgamma import fixtures
from bmgamma.boros_moll import d_row_closed, iter_c_rows, iter_d_rows, iter_q_ode, p_poly, q_poly
from bmgamma.errors import BMError
from bmgamma.jacobi import TRANSFORMS, GridSpec, scan, scan_csv_header, scan_csv_row
from bmgamma.poly import Poly, rat_str
from bmgamma.symdecomp import decompose
from bmgamma.triangles import build_triangle, gamma_of_decomposition, iter_signed
from bmgamma.verify import bfile_parse, computed_sequence, fixture, oeis_compare, run_suite


class UsageError(Exception):
    pass


def dump_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_compute(args) -> int:
    poly = p_poly(args.m) if args.poly == "p" else q_poly(args.m)
    if args.format == "json":
        text = dump_json({"m": args.m, "poly": args.poly, "coeffs": poly.to_json()})
    elif args.format == "csv":
        rows = ["i,coeff"] + [f"{i},{rat_str(c)}" for i, c in enumerate(poly.coeffs)]
        text = "\n".join(rows)
    else:
        text = poly.to_text()
    _emit(text, args.out)
    return 0


def cmd_decompose(args) -> int:
    d = decompose(q_poly(args.m), args.m)
    if args.format == "json":
        text = dump_json({"m": args.m, "a": d.a.to_json(), "b": d.b.to_json()})
    elif 1 <= args.m <= 5:
        text = fixtures.Q_DECOMPOSITIONS[args.m]["text"]
    else:
        text = f"a_{args.m}(x) = {d.a}\nb_{args.m}(x) = {d.b}"
    _emit(text, args.out)
    return 0


def cmd_gamma(args) -> int:
    row = build_triangle(args.m)[args.m]
    alpha_signed = [str((-1) ** k * v) for k, v in enumerate(row.alpha)]
    beta_signed = [str((-1) ** k * v) for k, v in enumerate(row.beta)]
    if args.format == "json":
        text = dump_json({
            "m": args.m,
            "alpha": [str(v) for v in row.alpha],
            "beta": [str(v) for v in row.beta],
            "alpha_signed": alpha_signed,
            "beta_signed": beta_signed,
        })
    else:
        text = "\n".join([
            f"alpha = [{', '.join(str(v) for v in row.alpha)}]",
            f"beta = [{', '.join(str(v) for v in row.beta)}]",
            f"alpha_{args.m}(x) = {Poly(int(v) for v in alpha_signed)}",
            f"beta_{args.m}(x) = {Poly(int(v) for v in beta_signed)}",
        ])
    _emit(text, args.out)
    return 0


def cmd_triangle(args) -> int:
    tri = build_triangle(args.max_m)
    text = tri.to_csv() if args.format == "csv" else tri.to_json()
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.max_m, strict_gamma=args.strict_gamma, quadrature=args.quadrature)
    _emit(report.to_json() if args.format == "json" else report.to_text(), args.out)
    return report.exit_code()


def cmd_jacobi_scan(args) -> int:
    try:
        spec = GridSpec.parse(args.alpha, args.beta, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    transforms = TRANSFORMS if args.transform == "both" else (args.transform,)
    stream = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(stream, lineterminator="\n") if args.format == "csv" else None
        if writer:
            writer.writerow(scan_csv_header())
        for transform in transforms:
            for rec in scan(spec, transform, strict=args.strict, workers=args.workers):
                if writer:
                    writer.writerow(scan_csv_row(rec))
                else:
                    stream.write(rec.to_json() + "\n")
    finally:
        if args.out:
            stream.close()
    return 0


def cmd_oeis_check(args) -> int:
    if bool(args.bfile) != bool(args.id):
        raise UsageError("--bfile and --id must be given together")
    lines = []
    ok = True
    if args.bfile:
        pairs = bfile_parse(Path(args.bfile).read_text())
        gen = computed_sequence(args.id)
        for idx, val in pairs:
            if gen is not None and idx >= 0:
                expected = gen(idx)
            else:
                first, terms = fixture(args.id)
                if not 0 <= idx - first < len(terms):
                    continue
                expected = terms[idx - first]
            if expected != val:
                ok = False
                lines.append(f"{args.id}: mismatch at index {idx}: b-file {val}, expected {expected}")
                break
        lines.append(f"{args.id}: {len(pairs)} b-file terms {'agree' if ok else 'DISAGREE'}")
    else:
        for sid in fixtures.OEIS:
            first, terms = fixtures.OEIS[sid]
            gen = computed_sequence(sid)
            good = oeis_compare(sid, [gen(n) for n in range(first, first + len(terms))], first)
            ok &= good
            lines.append(f"{sid}: {len(terms)} embedded terms {'match' if good else 'DO NOT match'}")
    _emit("\n".join(lines), None)
    return 0 if ok else 1


def cmd_bench(args) -> int:
    M = args.max_m
    routes = {
        "d-recurrence": lambda: list(iter_d_rows(M)),
        "d-closed-sum": lambda: [d_row_closed(m) for m in range(M + 1)],
        "c-recurrence": lambda: list(iter_c_rows(M)),
        "q-differential": lambda: list(iter_q_ode(M)),
        "triangle-recurrence": lambda: build_triangle(M),
        "signed-system": lambda: list(iter_signed(M)),
        "decompose+gamma": lambda: [gamma_of_decomposition(decompose(Poly(r.c), r.m)) for r in iter_c_rows(M)],
    }
    print(f"{'route':<22}{'seconds':>10}{'rows/s':>12}")
    for name, fn in routes.items():
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        print(f"{name:<22}{dt:>10.3f}{(M + 1) / dt if dt > 0 else float('inf'):>12.1f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bmgamma", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="coefficients of P_m or Q_m")
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--poly", choices=("p", "q"), default="p")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("decompose", help="symmetric decomposition (a_m, b_m) of Q_m")
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("gamma", help="gamma rows alpha_{m,k}, beta_{m,k}")
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("triangle", help="export the alpha/beta triangle")
    p.add_argument("--max-m", type=_nonneg, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--max-m", type=_nonneg, required=True)
    p.add_argument("--strict-gamma", action="store_true")
    p.add_argument("--quadrature", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("jacobi-scan", help="classify Jacobi polynomials over a parameter grid")
    p.add_argument("--alpha", required=True, metavar="A0:STEP:N")
    p.add_argument("--beta", required=True, metavar="B0:STEP:N")
    p.add_argument("--m", required=True, metavar="MIN:MAX")
    p.add_argument("--transform", choices=TRANSFORMS + ("both",), default="reversed")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_jacobi_scan)

    p = sub.add_parser("oeis-check", help="compare embedded fixtures or a b-file")
    p.add_argument("--bfile")
    p.add_argument("--id")
    p.set_defaults(func=cmd_oeis_check)

    p = sub.add_parser("bench", help="wall time per computation route")
    p.add_argument("--max-m", type=_nonneg, required=True)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"bmgamma: error: {exc}", file=sys.stderr)
        return 2
    except (BMError, OSError) as exc:
        print(f"bmgamma: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
