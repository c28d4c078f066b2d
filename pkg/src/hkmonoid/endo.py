"""Endomorphisms of HK_Θ as (Θ, p)-pure sequences and Boolean matrices.

An endomorphism sends each generator x_i to an idempotent e_{X_i}, so it is
stored as the tuple of supports ``(X_1, ..., X_n)`` (bit masks). Composition
becomes ``star`` on tuples and Boolean matrix product after ``psi``.
"""

from __future__ import annotations

import json
from collections.abc import Iterator, Sequence

from .graph import OrientedGraph, acyclic_subsets, is_acyclic, members, predicate_p, vset
from .idempotents import e
from .words import MAX_WORD_LEN, Word, check_length, content, hk_canonical, hk_equal, is_idempotent_word

PureSequence = tuple[int, ...]
BoolMatrix = tuple[tuple[int, ...], ...]

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    def __init__(self, candidates: int, budget: int):
        self.candidates = candidates
        self.budget = budget
        super().__init__(f"{candidates} candidate tuples exceed budget {budget}")


class ImpureSequence(ValueError):
    pass


def unit_sequence(n: int) -> PureSequence:
    return tuple(1 << i for i in range(n))


def _pair_ok(g: OrientedGraph, i: int, j: int, xi: int, xj: int) -> bool:
    if g.has_arrow(i, j):
        return predicate_p(g, xi, xj)
    if g.has_arrow(j, i):
        return predicate_p(g, xj, xi)
    return predicate_p(g, xi, xj) and predicate_p(g, xj, xi)


def is_pure(g: OrientedGraph, seq: Sequence[int]) -> bool:
    if len(seq) != g.n:
        raise ValueError(f"sequence has {len(seq)} entries, graph has {g.n} vertices")
    if any(x & ~g.full or not is_acyclic(g, x) for x in seq):
        return False
    return all(
        _pair_ok(g, i, j, seq[i - 1], seq[j - 1])
        for i in g.vertices
        for j in g.vertices
        if i < j
    )


def star(x: Sequence[int], y: Sequence[int]) -> PureSequence:
    """(x * y)_i = union of x_j over j in y_i."""
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    out = []
    for yi in y:
        z = 0
        for j in members(yi):
            z |= x[j - 1]
        out.append(z)
    return tuple(out)


def psi(seq: Sequence[int]) -> BoolMatrix:
    """Matrix whose column i is the characteristic vector of seq[i]."""
    n = len(seq)
    return tuple(tuple(seq[i] >> x & 1 for i in range(n)) for x in range(n))


def psi_inverse(a: BoolMatrix) -> PureSequence:
    n = len(a)
    return tuple(vset(x + 1 for x in range(n) if a[x][i]) for i in range(n))


def identity_matrix(n: int) -> BoolMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def bool_multiply(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    n = len(a)
    if len(b) != n or any(len(row) != n for row in (*a, *b)):
        raise ValueError("dimension mismatch")
    return tuple(
        tuple(int(any(a[i][k] and b[k][j] for k in range(n))) for j in range(n))
        for i in range(n)
    )


def phi_from_images(g: OrientedGraph, images: Sequence[Word]) -> PureSequence:
    """Content sequence of generator images, provided they define an endomorphism."""
    if len(images) != g.n:
        raise ValueError(f"expected {g.n} images, got {len(images)}")
    for i, w in enumerate(images, start=1):
        if not is_idempotent_word(g, w):
            raise ValueError(f"image of x_{i} is not idempotent")
    seq = tuple(content(w) for w in images)
    if not is_pure(g, seq):
        raise ImpureSequence(f"content sequence {format_sequence(seq)} is not (Θ,p)-pure")
    return seq


def substitute(g: OrientedGraph, seq: Sequence[int], w: Word) -> Word:
    out: tuple[int, ...] = ()
    for a in w:
        out += e(g, seq[a - 1])
    return out


def apply_endomorphism(g: OrientedGraph, seq: Sequence[int], w: Word,
                       max_len: int = MAX_WORD_LEN) -> Word:
    """Canonical word of φ(π(w)) where φ(x_i) = e_{X_i}."""
    image = substitute(g, seq, w)
    check_length(image, max_len)
    return hk_canonical(g, image, max_len)


def verify_extends(g: OrientedGraph, seq: Sequence[int]) -> bool:
    """Check every defining relation of HK_Θ on the images e_{X_i} by rewriting.

    Independent of ``predicate_p``: relations are checked word by word.
    """
    words = [e(g, x) for x in seq]
    if not all(is_idempotent_word(g, w) for w in words):
        return False
    for i in g.vertices:
        for j in g.vertices:
            if i >= j:
                continue
            wi, wj = words[i - 1], words[j - 1]
            if g.disconnected(i, j):
                if not hk_equal(g, wi + wj, wj + wi):
                    return False
                continue
            src, dst = (wi, wj) if g.has_arrow(i, j) else (wj, wi)
            prod = src + dst
            if not (hk_equal(g, prod + src, prod) and hk_equal(g, dst + prod, prod)):
                return False
    return True


# -- enumeration ------------------------------------------------------------

class _PTable:
    """p over A_Θ × A_Θ as per-row bitsets over candidate indices."""

    def __init__(self, g: OrientedGraph):
        self.sets = sorted(acyclic_subsets(g))
        k = len(self.sets)
        self.fwd = [0] * k  # fwd[a] has bit b iff p(A[a], A[b])
        self.bwd = [0] * k  # bwd[a] has bit b iff p(A[b], A[a])
        for a, xa in enumerate(self.sets):
            for b, xb in enumerate(self.sets):
                if predicate_p(g, xa, xb):
                    self.fwd[a] |= 1 << b
                    self.bwd[b] |= 1 << a
        self.both = [f & b for f, b in zip(self.fwd, self.bwd)]


def candidate_count(g: OrientedGraph) -> int:
    return len(acyclic_subsets(g)) ** g.n


def iter_endomorphisms(g: OrientedGraph) -> Iterator[PureSequence]:
    """Stream pure sequences in lexicographic order of (X_1, ..., X_n) masks.

    Prefixes are pruned as soon as a pair condition among fixed entries fails;
    the conditions are pairwise, so later entries cannot repair them.
    """
    table = _PTable(g)
    n = g.n
    everything = (1 << len(table.sets)) - 1
    # rows[k][i]: which bitset constrains position k given position i < k
    rows = []
    for k in range(1, n + 1):
        row = []
        for i in range(1, k):
            if g.has_arrow(i, k):
                row.append(table.fwd)
            elif g.has_arrow(k, i):
                row.append(table.bwd)
            else:
                row.append(table.both)
        rows.append(row)
    chosen = [0] * n

    def extend(k: int):
        allowed = everything
        for i, bits in enumerate(rows[k]):
            allowed &= bits[chosen[i]]
        while allowed:
            low = allowed & -allowed
            c = low.bit_length() - 1
            allowed ^= low
            chosen[k] = c
            if k + 1 == n:
                yield tuple(table.sets[idx] for idx in chosen)
            else:
                yield from extend(k + 1)

    yield from extend(0)


def enumerate_endomorphisms(g: OrientedGraph, budget: int = DEFAULT_BUDGET) -> list[PureSequence]:
    candidates = candidate_count(g)
    if candidates > budget:
        raise BudgetExceeded(candidates, budget)
    return list(iter_endomorphisms(g))


def count_endomorphisms(g: OrientedGraph) -> int:
    return sum(1 for _ in iter_endomorphisms(g))


def unit_group_size(g: OrientedGraph, budget: int = DEFAULT_BUDGET) -> int:
    """Number of pure sequences with a two-sided star-inverse among pure sequences."""
    unit = unit_sequence(g.n)
    # star(s, t) = unit forces every t_i nonempty, and symmetrically for s
    pool = [s for s in enumerate_endomorphisms(g, budget) if all(s)]
    return sum(
        1 for s in pool
        if any(star(s, t) == unit and star(t, s) == unit for t in pool)
    )


# -- text formats -----------------------------------------------------------

def format_sequence(seq: Sequence[int]) -> str:
    return "; ".join(",".join(map(str, members(x))) or "-" for x in seq)


def parse_sequence(text: str, n: int | None = None) -> PureSequence:
    parts = [p.strip() for p in text.split(";")]
    seq = []
    for part in parts:
        if part == "-":
            seq.append(0)
            continue
        try:
            vs = [int(t) for t in part.split(",") if t.strip()]
        except ValueError:
            raise ValueError(f"bad set {part!r}") from None
        if not vs:
            raise ValueError("empty set must be written as '-'")
        seq.append(vset(vs))
    if n is not None:
        if len(seq) != n:
            raise ValueError(f"expected {n} sets, got {len(seq)}")
        if any(x >> n for x in seq):
            raise ValueError(f"set member out of range 1..{n}")
    return tuple(seq)


def format_matrix(a: BoolMatrix) -> str:
    return "\n".join(" ".join(map(str, row)) for row in a)


def parse_matrix(text: str) -> BoolMatrix:
    rows = [tuple(int(t) for t in line.split()) for line in text.strip().splitlines() if line.strip()]
    n = len(rows)
    if any(len(r) != n or any(v not in (0, 1) for v in r) for r in rows):
        raise ValueError("matrix must be square with 0/1 entries")
    return tuple(rows)


def to_record(seq: Sequence[int]) -> str:
    return json.dumps({"sets": [list(members(x)) for x in seq], "matrix": [list(r) for r in psi(seq)]})


