"""Census of |A_Θ|, |End(HK_Θ)| and |Aut(Θ)| over all labeled graphs on n vertices.

Usage:
    python scripts/endomorphism_census.py [--max-n 3] [--distinct]

With --distinct, graphs are grouped up to isomorphism (first labeled
representative kept) and a multiplicity column is added.
"""

import argparse
import csv
import itertools
import sys
import time

from hkmonoid.endo import count_endomorphisms, unit_group_size
from hkmonoid.graph import acyclic_subsets, all_graphs, automorphisms


def canonical_key(g):
    return min(
        tuple(sorted((perm[u - 1], perm[v - 1]) for u, v in g.arrows))
        for perm in itertools.permutations(g.vertices)
    )


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--distinct", action="store_true")
    args = ap.parse_args(argv)

    writer = csv.writer(sys.stdout, lineterminator="\n")
    header = ["n", "arrows", "acyclic_sets", "endomorphisms", "automorphisms", "units"]
    if args.distinct:
        header.append("labelings")
    writer.writerow(header)
    start = time.perf_counter()
    for n in range(1, args.max_n + 1):
        groups = {}
        for g in all_graphs(n):
            key = canonical_key(g) if args.distinct else g.sorted_arrows()
            groups.setdefault(tuple(key), []).append(g)
        for graphs in groups.values():
            g = graphs[0]
            arrows = " ".join(f"{u}>{v}" for u, v in g.sorted_arrows()) or "-"
            row = [n, arrows, len(acyclic_subsets(g)), count_endomorphisms(g),
                   len(automorphisms(g)), unit_group_size(g)]
            if args.distinct:
                row.append(len(graphs))
            writer.writerow(row)
    print(f"# {time.perf_counter() - start:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
