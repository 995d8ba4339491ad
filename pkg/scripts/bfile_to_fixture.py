"""Turn a local OEIS b-file into a Python literal for ``bmgamma.fixtures.OEIS``.

    python scripts/bfile_to_fixture.py A001813 b001813.txt --terms 25

The output is printed; paste it into fixtures.py by hand. The script checks the
terms against the package's own generator first, when one exists.
"""
import argparse
import sys
from pathlib import Path

from bmgamma.verify import bfile_parse, computed_sequence


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("id")
    ap.add_argument("bfile")
    ap.add_argument("--terms", type=int, default=None, help="keep only the first N terms")
    args = ap.parse_args(argv)

    pairs = bfile_parse(Path(args.bfile).read_text())
    if not pairs:
        print("empty b-file", file=sys.stderr)
        return 1
    if args.terms is not None:
        pairs = pairs[: args.terms]
    first = pairs[0][0]
    for (i, _), j in zip(pairs, range(first, first + len(pairs))):
        if i != j:
            print(f"gap in b-file at index {j}", file=sys.stderr)
            return 1

    gen = computed_sequence(args.id)
    if gen is not None:
        bad = [(i, v) for i, v in pairs if gen(i) != v]
        if bad:
            i, v = bad[0]
            print(f"b-file disagrees with generator at {i}: {v} vs {gen(i)}", file=sys.stderr)
            return 1

    body = ", ".join(str(v) for _, v in pairs)
    print(f'    "{args.id}": ({first}, ({body},)),')
    return 0


if __name__ == "__main__":
    sys.exit(main())
