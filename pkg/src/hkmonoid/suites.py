"""Exhaustive and sampled theorem checks shared by ``hkmonoid verify`` and the tests.

Each suite runs per graph and returns a :class:`SuiteResult`; failures carry
counterexamples in the graph and word text formats so they can be replayed.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .endo import (
    apply_endomorphism,
    bool_multiply,
    enumerate_endomorphisms,
    format_sequence,
    is_pure,
    phi_from_images,
    psi,
    star,
    unit_group_size,
    unit_sequence,
    verify_extends,
)
from .graph import (
    OrientedGraph,
    acyclic_subsets,
    all_graphs,
    automorphisms,
    format_set,
    popcount,
    predicate_p,
)
from .idempotents import (
    arrows_between,
    braid_law,
    e,
    idempotent_word,
    mnrs_partition,
    product_is_idempotent,
    product_support_law,
)
from .kiselman import combine_law, epsilon_word, kiselman_graph, prop14_condition
from .words import (
    bounded_elements,
    content,
    format_word,
    hk_equal,
    is_idempotent_word,
    is_normal_form,
    is_quasi_subword,
    normalize,
    normalize_randomized,
    trace_canonical,
)

MAX_FAILURES_KEPT = 5


@dataclass
class SuiteResult:
    suite: str
    label: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    failure_count: int = 0
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def check(self, condition: bool, message: Callable[[], str]) -> None:
        self.cases += 1
        if not condition:
            self.failure_count += 1
            if len(self.failures) < MAX_FAILURES_KEPT:
                self.failures.append(message())

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.suite} [{self.label}] {self.cases} checks, {self.failure_count} failures{extra}"


def graph_label(g: OrientedGraph) -> str:
    arrows = ",".join(f"{u}>{v}" for u, v in g.sorted_arrows())
    return f"n={g.n}:{arrows or '-'}"


def _ctx(g: OrientedGraph) -> str:
    return g.serialize().strip().replace("\n", " / ")


def graphs_up_to(max_n: int) -> list[OrientedGraph]:
    return [g for n in range(1, max_n + 1) for g in all_graphs(n)]


# -- per-graph suites -------------------------------------------------------

def theorem_p(g: OrientedGraph) -> SuiteResult:
    """p(X,Y) agrees with idempotency of e_X e_Y; the join and braid laws follow."""
    res = SuiteResult("theorem-p", graph_label(g))
    sets = acyclic_subsets(g)
    for x, y in itertools.product(sets, repeat=2):
        via_p, via_oracle = product_is_idempotent(g, x, y)
        where = lambda: f"graph [{_ctx(g)}] X={format_set(x)} Y={format_set(y)}"
        res.check(via_p == via_oracle,
                  lambda: f"{where()}: p={via_p} but rewriting says idempotent={via_oracle}")
        braid = braid_law(g, x, y)
        if via_oracle:
            try:
                union = product_support_law(g, x, y)
                joined = union == x | y
            except (AssertionError, ValueError) as exc:
                joined, union = False, str(exc)
            res.check(joined, lambda: f"{where()}: e_X e_Y != e_(X∪Y) ({union})")
            res.check(braid, lambda: f"{where()}: braid identities fail for an idempotent product")
        else:
            res.check(not braid, lambda: f"{where()}: braid identities hold for a non-idempotent product")
    return res


def confluence(g: OrientedGraph, words: int = 1000, max_len: int = 6, seed: int = 0) -> SuiteResult:
    """Random vs deterministic reduction agree up to commutation."""
    res = SuiteResult("confluence", graph_label(g))
    rng = random.Random(f"{seed}:{g.serialize()}")
    for k in range(words):
        w = tuple(rng.randint(1, g.n) for _ in range(rng.randint(0, max_len)))
        det = normalize(g, w)
        rnd = normalize_randomized(g, w, seed=k)
        res.check(trace_canonical(g, det) == trace_canonical(g, rnd),
                  lambda: f"graph [{_ctx(g)}] word '{format_word(w)}' seed {k}: "
                          f"'{format_word(det)}' vs '{format_word(rnd)}'")
        res.check(is_normal_form(g, rnd) and is_quasi_subword(rnd, w) and content(rnd) == content(w),
                  lambda: f"graph [{_ctx(g)}] word '{format_word(w)}' seed {k}: bad reduct '{format_word(rnd)}'")
    return res


def idempotent_completeness(g: OrientedGraph, max_len: int = 6) -> SuiteResult:
    """Idempotents among all elements of length <= max_len are exactly the e_X."""
    res = SuiteResult("idempotents", graph_label(g))
    found = {w for w in bounded_elements(g, max_len) if is_idempotent_word(g, w)}
    expected = {trace_canonical(g, e(g, x)) for x in acyclic_subsets(g) if popcount(x) <= max_len}
    res.check(found == expected,
              lambda: f"graph [{_ctx(g)}]: extra {sorted(found - expected)} missing {sorted(expected - found)}")
    res.detail = f"{len(found)} idempotents"
    return res


def mnrs(g: OrientedGraph) -> SuiteResult:
    """Disjoint-union identities for all pairs; no M->N arrows whenever p holds."""
    res = SuiteResult("mnrs", graph_label(g))
    sets = acyclic_subsets(g)
    for x, y in itertools.product(sets, repeat=2):
        part = mnrs_partition(g, x, y)
        inter = x & y
        where = f"graph [{_ctx(g)}] X={format_set(x)} Y={format_set(y)}"
        res.check(
            part.r | part.s == inter and not part.r & part.s
            and part.m == (y & ~x) | part.r and not (y & ~x) & part.r
            and part.n == (x & ~y) | part.s and not (x & ~y) & part.s
            and part.n | part.r == x and not part.n & part.r
            and part.m | part.s == y and not part.m & part.s
            and part.m | part.n == x | y and not part.m & part.n,
            lambda: f"{where}: partition identities fail for {part}",
        )
        if predicate_p(g, x, y):
            bad = arrows_between(g, part.m, part.n)
            res.check(not bad, lambda: f"{where}: arrows {bad} go from M to N although p holds")
    return res


def phi_psi(g: OrientedGraph, samples: int | None = None, seed: int = 0) -> SuiteResult:
    """Φ turns composition into star, Ψ turns star into Boolean product, star is closed.

    Exhaustive over pairs when ``samples`` is None, otherwise seeded random pairs.
    """
    res = SuiteResult("phi-psi", graph_label(g))
    pure = enumerate_endomorphisms(g)
    pure_set = set(pure)
    unit = unit_sequence(g.n)
    res.check(unit in pure_set, lambda: f"graph [{_ctx(g)}]: unit sequence is not pure")
    if samples is None:
        pairs: Iterable = itertools.product(pure, repeat=2)
    else:
        rng = random.Random(f"{seed}:{g.serialize()}")
        pairs = [(rng.choice(pure), rng.choice(pure)) for _ in range(samples)]
    for s, t in pairs:
        st = star(s, t)
        where = f"graph [{_ctx(g)}] s=({format_sequence(s)}) t=({format_sequence(t)})"
        images = [apply_endomorphism(g, s, apply_endomorphism(g, t, (i,))) for i in g.vertices]
        res.check(tuple(content(w) for w in images) == st,
                  lambda: f"{where}: contents of composite images differ from s*t=({format_sequence(st)})")
        try:
            composed = phi_from_images(g, images)
        except ValueError as exc:
            composed = str(exc)
        res.check(composed == st, lambda: f"{where}: Φ(s∘t) = {composed!r}")
        res.check(all(hk_equal(g, w, e(g, z)) for w, z in zip(images, st)),
                  lambda: f"{where}: composite images are not e_(s*t)_i")
        res.check(psi(st) == bool_multiply(psi(s), psi(t)), lambda: f"{where}: Ψ not multiplicative")
        res.check(st in pure_set, lambda: f"{where}: s*t=({format_sequence(st)}) is not pure")
    res.detail = f"|S|={len(pure)}"
    return res


def closure(g: OrientedGraph) -> SuiteResult:
    """Star closure, associativity on triples drawn from S, and unit laws."""
    res = SuiteResult("closure", graph_label(g))
    pure = enumerate_endomorphisms(g)
    pure_set = set(pure)
    unit = unit_sequence(g.n)
    res.check(unit in pure_set, lambda: f"graph [{_ctx(g)}]: unit sequence is not pure")
    for s in pure:
        res.check(star(unit, s) == s == star(s, unit),
                  lambda: f"graph [{_ctx(g)}]: unit law fails for ({format_sequence(s)})")
        for t in pure:
            st = star(s, t)
            res.check(st in pure_set,
                      lambda: f"graph [{_ctx(g)}]: ({format_sequence(s)}) * ({format_sequence(t)}) not pure")
    rng = random.Random(f"assoc:{g.serialize()}")
    for _ in range(200):
        a, b, c = (rng.choice(pure) for _ in range(3))
        res.check(star(star(a, b), c) == star(a, star(b, c)),
                  lambda: f"graph [{_ctx(g)}]: star not associative")
    res.detail = f"|S|={len(pure)}"
    return res


def units(g: OrientedGraph) -> SuiteResult:
    res = SuiteResult("units", graph_label(g))
    got = unit_group_size(g)
    want = len(automorphisms(g))
    res.check(got == want, lambda: f"graph [{_ctx(g)}]: {got} invertible endomorphisms, {want} automorphisms")
    res.detail = f"{got} = {want}" if got == want else f"{got} != {want}"
    return res


def extends(g: OrientedGraph, samples: int | None = None, seed: int = 0) -> SuiteResult:
    """verify_extends (relations by rewriting) agrees with is_pure on tuples over A_Θ."""
    res = SuiteResult("extends", graph_label(g))
    sets = acyclic_subsets(g)
    if samples is None:
        tuples: Iterable = itertools.product(sets, repeat=g.n)
    else:
        rng = random.Random(f"{seed}:{g.serialize()}")
        tuples = [tuple(rng.choice(sets) for _ in range(g.n)) for _ in range(samples)]
    for seq in tuples:
        res.check(verify_extends(g, seq) == is_pure(g, seq),
                  lambda: f"graph [{_ctx(g)}] seq ({format_sequence(seq)}): relations and purity disagree")
    return res


# -- Kiselman cross-check ---------------------------------------------------

def prop14(max_n: int = 5, combine_max_n: int = 4) -> list[SuiteResult]:
    """Order condition = predicate p = rewriting idempotency on K_n, for every pair."""
    results = []
    for n in range(1, max_n + 1):
        g = kiselman_graph(n)
        res = SuiteResult("prop14", f"K_{n}")
        pairs = 0
        for x in range(1 << n):
            res.check(epsilon_word(x) == idempotent_word(g, x).word,
                      lambda: f"K_{n} X={format_set(x)}: ε_X differs from e_X word")
            for y in range(1 << n):
                pairs += 1
                order = prop14_condition(x, y)
                path = predicate_p(g, x, y)
                prod = epsilon_word(x) + epsilon_word(y)
                idem = is_idempotent_word(g, prod)
                res.check(order == path == idem,
                          lambda: f"K_{n} X={format_set(x)} Y={format_set(y)}: "
                                  f"order={order} p={path} idempotent={idem}")
                if order:
                    res.check(hk_equal(g, prod, epsilon_word(x | y)),
                              lambda: f"K_{n} X={format_set(x)} Y={format_set(y)}: ε_X ε_Y != ε_(X∪Y)")
                if n <= combine_max_n:
                    res.check(combine_law(x, y, n),
                              lambda: f"K_{n} X={format_set(x)} Y={format_set(y)}: combined products not idempotent")
        res.detail = f"{pairs} pairs"
        results.append(res)
    return results


GRAPH_SUITES: dict[str, Callable[..., SuiteResult]] = {
    "theorem-p": theorem_p,
    "confluence": confluence,
    "idempotents": idempotent_completeness,
    "mnrs": mnrs,
    "phi-psi": phi_psi,
    "closure": closure,
    "units": units,
    "extends": extends,
}
SUITE_NAMES = [*GRAPH_SUITES, "prop14"]


def _run_one(args):
    name, g, kwargs = args
    return GRAPH_SUITES[name](g, **kwargs)


def run_graph_suite(name: str, graphs: Iterable[OrientedGraph], jobs: int = 1, **kwargs) -> list[SuiteResult]:
    """Run a per-graph suite; results come back in input order whatever ``jobs`` is."""
    tasks = [(name, g, kwargs) for g in graphs]
    if jobs <= 1:
        return [_run_one(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, tasks))
