"""Simple oriented graphs on vertices 1..n with bit-mask vertex sets.

A vertex set is a plain ``int``: vertex ``v`` lives in bit ``v - 1``.
Everything here is pure; graphs are immutable once built.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

MAX_VERTICES = 64
MAX_AUT_VERTICES = 8


class GraphError(ValueError):
    """Malformed graph input or a violated graph invariant."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CycleError(ValueError):
    pass


# -- vertex sets ------------------------------------------------------------

def vset(vertices: Iterable[int] = ()) -> int:
    mask = 0
    for v in vertices:
        if v < 1:
            raise ValueError(f"vertex {v} out of range")
        mask |= 1 << (v - 1)
    return mask


def members(mask: int) -> tuple[int, ...]:
    """Vertices of ``mask`` in increasing order."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def format_set(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


# -- graphs -----------------------------------------------------------------

@dataclass(frozen=True)
class OrientedGraph:
    """A finite simple oriented graph: no loops, no 2-cycles, no multi-arrows.

    ``out_masks[v]`` / ``in_masks[v]`` hold the successors / predecessors of
    ``v`` as bit masks (index 0 is unused).
    """

    n: int
    arrows: frozenset[tuple[int, int]] = frozenset()
    out_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)
    in_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n!r}")
        arrows = frozenset((int(u), int(v)) for u, v in self.arrows)
        out = [0] * (self.n + 1)
        inn = [0] * (self.n + 1)
        for u, v in arrows:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"arrow {u}->{v} out of range 1..{self.n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if (v, u) in arrows:
                raise GraphError(f"2-cycle between {u} and {v}")
            out[u] |= 1 << (v - 1)
            inn[v] |= 1 << (u - 1)
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "out_masks", tuple(out))
        object.__setattr__(self, "in_masks", tuple(inn))

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[tuple[int, int]]) -> OrientedGraph:
        arrows = list(arrows)
        if len(set(arrows)) != len(arrows):
            raise GraphError("duplicate arrow")
        return cls(n, frozenset(arrows))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_arrow(self, u: int, v: int) -> bool:
        return bool(self.out_masks[u] >> (v - 1) & 1)

    def connected(self, u: int, v: int) -> bool:
        return self.has_arrow(u, v) or self.has_arrow(v, u)

    def disconnected(self, u: int, v: int) -> bool:
        # equal vertices are never "not connected"
        return u != v and not self.connected(u, v)

    def sorted_arrows(self) -> list[tuple[int, int]]:
        return sorted(self.arrows)

    def serialize(self) -> str:
        lines = [f"n {self.n}"]
        lines += [f"{u} {v}" for u, v in self.sorted_arrows()]
        return "\n".join(lines) + "\n"

    def __str__(self):
        arrows = ", ".join(f"{u}->{v}" for u, v in self.sorted_arrows())
        return f"OrientedGraph(n={self.n}; {arrows})"


def parse_graph(text: str) -> OrientedGraph:
    """Parse the ``n <count>`` / ``<u> <v>`` text format (``#`` comments)."""
    n = None
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise GraphError(f"expected 'n <count>', got {line!r}", lineno)
            try:
                n = int(fields[1])
            except ValueError:
                raise GraphError(f"bad vertex count {fields[1]!r}", lineno) from None
            if not 1 <= n <= MAX_VERTICES:
                raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}", lineno)
            continue
        if len(fields) != 2:
            raise GraphError(f"expected '<u> <v>', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphError(f"non-integer vertex in {line!r}", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"vertex out of range 1..{n} in {line!r}", lineno)
        if u == v:
            raise GraphError(f"self-loop at {u}", lineno)
        if (u, v) in seen:
            raise GraphError(f"duplicate arrow {u}->{v}", lineno)
        if (v, u) in seen:
            raise GraphError(f"2-cycle between {u} and {v}", lineno)
        seen.add((u, v))
    if n is None:
        raise GraphError("missing 'n <count>' line")
    return OrientedGraph(n, frozenset(seen))


def load_graph(path) -> OrientedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


@dataclass(frozen=True)
class InducedSubgraph:
    graph: OrientedGraph
    vertices: int

    @property
    def arrows(self) -> frozenset[tuple[int, int]]:
        x = self.vertices
        return frozenset(
            (u, v) for u, v in self.graph.arrows if x >> (u - 1) & 1 and x >> (v - 1) & 1
        )


def induced_subgraph(g: OrientedGraph, x: int) -> InducedSubgraph:
    return InducedSubgraph(g, x & g.full)


def _peel_sinks(g: OrientedGraph, x: int) -> tuple[list[int], int]:
    # repeatedly remove the smallest vertex with no out-arrow inside the rest
    order = []
    rest = x
    while rest:
        for v in members(rest):
            if not g.out_masks[v] & rest:
                order.append(v)
                rest &= ~(1 << (v - 1))
                break
        else:
            break
    return order, rest


def is_acyclic(g: OrientedGraph, x: int) -> bool:
    return _peel_sinks(g, x)[1] == 0


def topological_order(g: OrientedGraph, x: int) -> tuple[int, ...]:
    """Enumerate ``x`` as (i_1, ..., i_k) so that i_j -> i_j' forces j > j'.

    Targets come before sources; ties go to the smallest vertex.
    """
    order, rest = _peel_sinks(g, x)
    if rest:
        raise CycleError(f"{format_set(x)} contains an oriented cycle")
    return tuple(order)


def acyclic_subsets(g: OrientedGraph) -> list[int]:
    """All vertex sets inducing an acyclic subgraph, by size then mask."""
    found = {0}
    result = [0]
    for k in range(1, g.n + 1):
        level = []
        for combo in itertools.combinations(range(g.n), k):
            x = sum(1 << b for b in combo)
            # downward closure: every maximal proper subset must already be acyclic
            if all(x & ~(1 << b) in found for b in combo) and is_acyclic(g, x):
                level.append(x)
        if not level:
            break
        level.sort()
        found.update(level)
        result.extend(level)
    return result


def reachable(g: OrientedGraph, sources: int, within: int) -> int:
    """Vertices of ``within`` reachable from ``sources`` inside Θ[within]."""
    reach = frontier = sources & within
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= g.out_masks[v]
        frontier = nxt & within & ~reach
        reach |= frontier
    return reach


def predicate_p(g: OrientedGraph, x: int, y: int) -> bool:
    """No directed path inside Θ[x ∪ y] from y∖x to x∖y."""
    return not reachable(g, y & ~x, x | y) & (x & ~y)


def automorphisms(g: OrientedGraph) -> list[tuple[int, ...]]:
    """Arrow-preserving permutations; ``sigma[v - 1]`` is the image of ``v``."""
    if g.n > MAX_AUT_VERTICES:
        raise ValueError(f"automorphism brute force limited to n <= {MAX_AUT_VERTICES}")
    result = []
    for perm in itertools.permutations(g.vertices):
        if all((perm[u - 1], perm[v - 1]) in g.arrows for u, v in g.arrows):
            # bijective on a finite arrow set, so image == arrows
            result.append(perm)
    return result


# -- graph families ---------------------------------------------------------

def all_graphs(n: int) -> Iterator[OrientedGraph]:
    """All 3^(n choose 2) labeled simple oriented graphs on [n]."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        arrows = []
        for (u, v), c in zip(pairs, choice):
            if c == 1:
                arrows.append((u, v))
            elif c == 2:
                arrows.append((v, u))
        yield OrientedGraph(n, frozenset(arrows))


def edgeless_graph(n: int) -> OrientedGraph:
    return OrientedGraph(n)


def path_graph(n: int) -> OrientedGraph:
    return OrientedGraph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> OrientedGraph:
    if n < 3:
        raise GraphError("an oriented cycle needs at least 3 vertices")
    return OrientedGraph(n, frozenset((i, i % n + 1) for i in range(1, n + 1)))


def random_dag(n: int, seed: int, density: float = 0.5) -> OrientedGraph:
    """Random acyclic graph with arrows from larger to smaller labels."""
    rng = random.Random(seed)
    arrows = [(u, v) for u in range(1, n + 1) for v in range(1, u) if rng.random() < density]
    return OrientedGraph(n, frozenset(arrows))
