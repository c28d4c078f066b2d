"""Command-line interface: ``hkmonoid <subcommand> ...``.

Exit codes: 0 success (``equal``: words are equal), 1 negative verdict or a
failed verification, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time

from . import endo, suites
from .graph import (
    GraphError,
    acyclic_subsets,
    automorphisms,
    cycle_graph,
    format_set,
    load_graph,
    members,
    path_graph,
    predicate_p,
    random_dag,
    vset,
)
from .idempotents import enumerate_idempotents, mnrs_partition
from .kiselman import kiselman_graph
from .words import (
    MAX_WORD_LEN,
    content,
    format_word,
    hk_equal,
    normalize,
    parse_word,
    trace_canonical,
)

MAX_VERIFY_N = 4
MAX_PROP14_N = 6


class UsageError(Exception):
    pass


def _emit(args, record: dict, human: str) -> None:
    if args.machine:
        print(json.dumps(record))
    else:
        print(human)


def _graph(args, required: bool = True):
    if args.graph is not None:
        return load_graph(args.graph)
    if args.kiselman is not None:
        return kiselman_graph(args.kiselman)
    if required:
        raise UsageError("a graph source is required: -g FILE or --kiselman N")
    return None


def _parse_set(text: str, n: int) -> int:
    text = text.strip()
    if text in ("-", ""):
        return 0
    x = vset(int(t) for t in text.replace(",", " ").split())
    if x >> n:
        raise ValueError(f"set {text!r} has members outside 1..{n}")
    return x


# -- subcommands ------------------------------------------------------------

def cmd_normalize(args) -> int:
    g = _graph(args)
    w = parse_word(args.word, g.n)
    nf = normalize(g, w, args.max_word_len)
    tc = trace_canonical(g, nf)
    _emit(args,
          {"word": list(w), "normal_form": list(nf), "trace_canonical": list(tc),
           "content": list(members(content(w)))},
          f"{format_word(nf)}\ntrace-canonical: {format_word(tc)}\ncontent: {format_set(content(w))}")
    return 0


def cmd_equal(args) -> int:
    g = _graph(args)
    w1 = parse_word(args.word1, g.n)
    w2 = parse_word(args.word2, g.n)
    same = hk_equal(g, w1, w2, args.max_word_len)
    _emit(args, {"equal": same}, "equal" if same else "unequal")
    return 0 if same else 1


def cmd_content(args) -> int:
    g = _graph(args)
    w = parse_word(args.word, g.n)
    c = content(w)
    _emit(args, {"content": list(members(c))}, format_set(c))
    return 0


def cmd_idempotents(args) -> int:
    g = _graph(args)
    for h in enumerate_idempotents(g):
        _emit(args, {"support": list(members(h.support)), "word": list(h.word)}, str(h))
    return 0


def cmd_p(args) -> int:
    g = _graph(args)
    x = _parse_set(args.x, g.n)
    y = _parse_set(args.y, g.n)
    acyclic = set(acyclic_subsets(g))
    for name, s in (("X", x), ("Y", y)):
        if s not in acyclic:
            print(f"warning: {name}={format_set(s)} is not acyclic; p is evaluated by paths only",
                  file=sys.stderr)
    holds = predicate_p(g, x, y)
    record = {"p": holds}
    human = "true" if holds else "false"
    if args.partition:
        part = mnrs_partition(g, x, y)
        record.update({k: list(members(getattr(part, k))) for k in "mnrs"})
        human += "\n" + " ".join(f"{k.upper()}={format_set(getattr(part, k))}" for k in "mnrs")
    _emit(args, record, human)
    return 0


def cmd_endos(args) -> int:
    g = _graph(args)
    if args.mode == "count":
        # streams without materialising, so the budget does not apply
        n = endo.count_endomorphisms(g)
        _emit(args, {"count": n}, str(n))
        return 0
    candidates = endo.candidate_count(g)
    if candidates > args.budget:
        raise endo.BudgetExceeded(candidates, args.budget)
    for k, seq in enumerate(endo.iter_endomorphisms(g)):
        if args.machine:
            print(endo.to_record(seq))
        elif args.mode == "list":
            print(endo.format_sequence(seq))
        else:
            if k:
                print()
            print(endo.format_matrix(endo.psi(seq)))
    return 0


def cmd_aut(args) -> int:
    g = _graph(args)
    for perm in automorphisms(g):
        _emit(args, {"images": list(perm)}, " ".join(map(str, perm)))
    return 0


def cmd_verify(args) -> int:
    names = args.suite or suites.SUITE_NAMES
    for name in names:
        if name not in suites.SUITE_NAMES:
            raise UsageError(f"unknown suite {name!r}; choose from {', '.join(suites.SUITE_NAMES)}")
    if args.all_graphs:
        if args.max_n > MAX_VERIFY_N:
            raise UsageError(f"--all-graphs is limited to --max-n <= {MAX_VERIFY_N}")
        graphs = suites.graphs_up_to(args.max_n)
    else:
        g = _graph(args, required=any(n != "prop14" for n in names))
        graphs = [g] if g is not None else []

    results: list[suites.SuiteResult] = []
    for name in names:
        if name == "prop14":
            if args.max_n > MAX_PROP14_N:
                raise UsageError(f"prop14 is limited to --max-n <= {MAX_PROP14_N}")
            results += suites.prop14(args.max_n)
            continue
        kwargs = {}
        if name == "confluence":
            kwargs = {"words": args.words, "seed": args.seed}
        if name in ("phi-psi", "extends"):
            small = [g for g in graphs if g.n <= 2]
            large = [g for g in graphs if g.n > 2]
            results += suites.run_graph_suite(name, small, args.jobs, seed=args.seed)
            results += suites.run_graph_suite(name, large, args.jobs, samples=args.samples, seed=args.seed)
            continue
        results += suites.run_graph_suite(name, graphs, args.jobs, **kwargs)

    failed = False
    for name in names:
        group = [r for r in results if r.suite == name]
        ok = all(r.ok for r in group)
        failed |= not ok
        if args.machine:
            for r in group:
                print(json.dumps({"suite": r.suite, "case": r.label, "checks": r.cases,
                                  "failures": r.failure_count, "detail": r.detail,
                                  "counterexamples": r.failures}))
            continue
        if len(group) == 1:
            print(group[0].line())
        else:
            checks = sum(r.cases for r in group)
            status = "PASS" if ok else "FAIL"
            print(f"{status} {name}: {len(group)} cases, {checks} checks")
        for r in group:
            if not r.ok:
                if len(group) > 1:
                    print("  " + r.line())
                for msg in r.failures:
                    print("    counterexample: " + msg)
    return 1 if failed else 0


BENCH_FIELDS = ["family", "n", "p_pairs_per_sec", "reductions_per_sec", "tuples_per_sec"]


def _bench_graph(family: str, n: int, seed: int):
    if family == "kiselman":
        return kiselman_graph(n)
    if family == "random":
        return random_dag(n, seed + n)
    if family == "path":
        return path_graph(n)
    if family == "cycle":
        return cycle_graph(n)
    raise UsageError(f"unknown family {family!r}")


def _rate(work, seconds: float) -> float:
    done = 0
    start = time.perf_counter()
    while True:
        done += work()
        elapsed = time.perf_counter() - start
        if elapsed >= seconds:
            return done / elapsed


def _stream_rate(stream, seconds: float) -> float:
    count = 0
    start = time.perf_counter()
    for _ in stream:
        count += 1
        if count % 256 == 0 and time.perf_counter() - start >= seconds:
            break
    return count / max(time.perf_counter() - start, 1e-9)


def cmd_bench(args) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(BENCH_FIELDS)
    for n in args.sizes:
        g = _bench_graph(args.family, n, args.seed)
        rng = random.Random(args.seed)
        sets = acyclic_subsets(g)

        def p_work():
            for _ in range(100):
                predicate_p(g, rng.choice(sets), rng.choice(sets))
            return 100

        def reduce_work():
            w = tuple(rng.randint(1, n) for _ in range(3 * n))
            return len(w) - len(normalize(g, w))

        p_rate = _rate(p_work, args.seconds)
        red_rate = _rate(reduce_work, args.seconds)
        tup_rate = _stream_rate(endo.iter_endomorphisms(g), args.seconds)
        writer.writerow([args.family, n, f"{p_rate:.1f}", f"{red_rate:.1f}", f"{tup_rate:.1f}"])
        sys.stdout.flush()
    return 0


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("-g", "--graph", metavar="FILE", help="graph file")
    src.add_argument("--kiselman", type=int, metavar="N", help="use the Kiselman graph on N vertices")
    common.add_argument("--machine", action="store_true", help="one JSON object per output line")
    common.add_argument("--budget", type=int, default=endo.DEFAULT_BUDGET, help="candidate tuple budget")
    common.add_argument("--max-word-len", type=int, default=MAX_WORD_LEN)

    parser = argparse.ArgumentParser(prog="hkmonoid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="reduce a word to normal form")
    p.add_argument("word")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("equal", parents=[common], help="decide equality of two words")
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("content", parents=[common], help="content of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_content)

    p = sub.add_parser("idempotents", parents=[common], help="list all idempotents e_X")
    p.set_defaults(func=cmd_idempotents)

    p = sub.add_parser("p", parents=[common], help="evaluate the predicate p(X, Y)")
    p.add_argument("x", help="comma-separated vertices or '-'")
    p.add_argument("y", help="comma-separated vertices or '-'")
    p.add_argument("--partition", action="store_true", help="also print M, N, R, S")
    p.set_defaults(func=cmd_p)

    p = sub.add_parser("endos", parents=[common], help="enumerate endomorphisms")
    p.add_argument("mode", choices=["count", "list", "matrices"])
    p.set_defaults(func=cmd_endos)

    p = sub.add_parser("aut", parents=[common], help="graph automorphisms")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("verify", parents=[common], help="run theorem-verification suites")
    p.add_argument("--suite", action="append", choices=suites.SUITE_NAMES)
    p.add_argument("--all-graphs", action="store_true", help="all labeled graphs with n <= --max-n")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--samples", type=int, default=200, help="random pairs/tuples for n >= 3")
    p.add_argument("--words", type=int, default=1000, help="random words per graph (confluence)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="timing table as CSV")
    p.add_argument("--family", default="kiselman", choices=["kiselman", "random", "path", "cycle"])
    p.add_argument("--sizes", type=int, nargs="*", default=[])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--seconds", type=float, default=0.2, help="time box per metric")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, ValueError, endo.BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
