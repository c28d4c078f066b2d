"""Number of endomorphisms of K_n, counted by streaming the pure sequences.

Usage:
    python scripts/kiselman_counts.py [--max-n 5]
"""

import argparse
import time

from hkmonoid.endo import candidate_count, count_endomorphisms
from hkmonoid.kiselman import kiselman_graph


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args(argv)
    print(f"{'n':>2} {'|End(K_n)|':>12} {'candidates':>14} {'seconds':>8}")
    for n in range(1, args.max_n + 1):
        g = kiselman_graph(n)
        start = time.perf_counter()
        count = count_endomorphisms(g)
        print(f"{n:>2} {count:>12} {candidate_count(g):>14} {time.perf_counter() - start:>8.2f}")


if __name__ == "__main__":
    main()
