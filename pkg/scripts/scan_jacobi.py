"""Explore which Jacobi parameters give alternatingly bi-gamma-positive polynomials.

Scans a rational (alpha, beta) grid and prints, for each m, the fraction of
non-degenerate points where both parts of the symmetric decomposition are
alternatingly gamma-positive. The Boros-Moll line beta = -alpha is reported
separately.

    python scripts/scan_jacobi.py --alpha 0:1/2:9 --beta=-4:1/2:9 --m 1:8 --workers 4
"""
import argparse
import sys
from collections import defaultdict

from bmgamma.jacobi import GridSpec, scan


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--alpha", default="0:1/2:9")
    ap.add_argument("--beta", default="-4:1/2:9")
    ap.add_argument("--m", default="1:8")
    ap.add_argument("--transform", choices=("raw", "reversed"), default="reversed")
    ap.add_argument("--strict", action="store_true")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args(argv)

    spec = GridSpec.parse(args.alpha, args.beta, args.m)
    hits = defaultdict(int)
    total = defaultdict(int)
    degenerate = defaultdict(int)
    diagonal = defaultdict(list)
    for rec in scan(spec, args.transform, strict=args.strict, workers=args.workers):
        if rec.degenerate:
            degenerate[rec.m] += 1
            continue
        total[rec.m] += 1
        hits[rec.m] += rec.alternatingly_bi_gamma_positive
        if rec.beta == -rec.alpha:
            diagonal[rec.m].append((rec.alpha, rec.alternatingly_bi_gamma_positive))

    print(f"{'m':>3}{'points':>8}{'hits':>6}{'share':>8}{'degen':>7}  beta=-alpha hits")
    for m in range(spec.m_min, spec.m_max + 1):
        n = total[m]
        share = hits[m] / n if n else 0.0
        diag = " ".join(str(a) for a, ok in diagonal[m] if ok) or "-"
        print(f"{m:>3}{n:>8}{hits[m]:>6}{share:>8.2f}{degenerate[m]:>7}  {diag}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
