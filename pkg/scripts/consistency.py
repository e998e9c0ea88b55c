"""Exhaustive invariant sweep over a Weyl group, printed as TAP.

    python scripts/consistency.py B3 C3
    python scripts/consistency.py F4 --max-length 8 --budget 2000
"""

import argparse
import sys

from schubsing.oracle import exhaustive_consistency


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("types", nargs="+")
    p.add_argument("--max-length", type=int)
    p.add_argument("--budget", type=int, default=2000)
    p.add_argument("--json", action="store_true", help="one JSON line per type instead of TAP")
    args = p.parse_args(argv)
    ok = True
    for desc in args.types:
        rep = exhaustive_consistency(desc, budget=args.budget, max_length=args.max_length)
        print(rep.to_json() if args.json else f"# {rep.descriptor}, {rep.elements} elements\n{rep.tap()}")
        ok &= rep.ok
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
