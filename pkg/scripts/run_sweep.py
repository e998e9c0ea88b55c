"""Count smooth and singular Schubert varieties per type.

    python scripts/run_sweep.py A3 B3 C3 D4 --jobs 0
"""

import argparse
import time

from schubsing.cli import SweepConfig, run_sweep


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("types", nargs="+")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=2000)
    args = p.parse_args(argv)
    print(f"{'type':<6}{'|W|':>6}{'smooth':>8}{'singular':>10}{'seconds':>9}")
    for desc in args.types:
        t0 = time.perf_counter()
        r = run_sweep(SweepConfig(desc, jobs=args.jobs, budget=args.budget))
        print(f"{r['type']:<6}{r['total']:>6}{r['smooth']:>8}{r['singular']:>10}{time.perf_counter() - t0:>9.1f}")


if __name__ == "__main__":
    main()
