"""Run the verification suite at a chosen depth and write the JSON report.

    python scripts/run_verify.py --max-m 300 --strict-gamma --out report.json
"""
import argparse
import sys
import time
from pathlib import Path

from bmgamma.verify import run_suite


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-m", type=int, default=300)
    ap.add_argument("--strict-gamma", action="store_true")
    ap.add_argument("--quadrature", action="store_true")
    ap.add_argument("--out", default=None)
    args = ap.parse_args(argv)

    t0 = time.perf_counter()
    rep = run_suite(args.max_m, strict_gamma=args.strict_gamma, quadrature=args.quadrature)
    print(rep.to_text())
    print(f"elapsed {time.perf_counter() - t0:.1f}s")
    if args.out:
        Path(args.out).write_text(rep.to_json() + "\n")
    return rep.exit_code()


if __name__ == "__main__":
    sys.exit(main())
