"""Words over the generators of HK_Θ and the cancellation rewriting system.

A word is a tuple of vertex indices; ``()`` is the unit. Equality in the
monoid is decided by reducing both words with elementary cancellations and
comparing the lexicographically least representatives of their commutation
classes.
"""

from __future__ import annotations

import itertools
import random
import re
from collections.abc import Iterable
from typing import NamedTuple

from .graph import OrientedGraph, vset

Word = tuple[int, ...]

MAX_WORD_LEN = 10_000
MAX_BOUNDED_LEN = 8
MAX_BOUNDED_VERTICES = 4


class WordLengthError(ValueError):
    pass


def check_length(w: Word, limit: int = MAX_WORD_LEN) -> None:
    if len(w) > limit:
        raise WordLengthError(f"word of length {len(w)} exceeds limit {limit}")


def parse_word(text: str, n: int | None = None) -> Word:
    """Parse ``"2 1 2"`` or ``"2,1,2"``; the empty string is the unit."""
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    try:
        w = tuple(int(t) for t in tokens)
    except ValueError:
        raise ValueError(f"bad word syntax: {text!r}") from None
    for a in w:
        if a < 1 or (n is not None and a > n):
            raise ValueError(f"letter {a} out of range" + (f" 1..{n}" if n else ""))
    return w


def format_word(w: Iterable[int]) -> str:
    return " ".join(map(str, w))


def content(w: Iterable[int]) -> int:
    return vset(w)


class Cancellation(NamedTuple):
    """``w = w1 a u a w2`` with the two ``a`` at ``first`` and ``second``."""

    kind: str  # "right" drops the second a, "left" drops the first
    first: int
    second: int

    def apply(self, w: Word) -> Word:
        drop = self.second if self.kind == "right" else self.first
        return w[:drop] + w[drop + 1:]


def _candidates(g: OrientedGraph, w: Word):
    for i, a in enumerate(w):
        into_a = g.in_masks[a]
        out_of_a = g.out_masks[a]
        u = 0
        for j in range(i + 1, len(w)):
            b = w[j]
            if b == a:
                if not u & into_a:
                    yield Cancellation("right", i, j)
                if not u & out_of_a:
                    yield Cancellation("left", i, j)
            u |= 1 << (b - 1)
            if u & into_a and u & out_of_a:
                # u only grows, neither kind can apply from here on
                break


def cancellation_candidates(g: OrientedGraph, w: Word) -> list[Cancellation]:
    """All applicable elementary cancellations of ``w``.

    Ordered by position of the first ``a``, then length of ``u``, right
    before left.
    """
    return list(_candidates(g, w))


def is_normal_form(g: OrientedGraph, w: Word) -> bool:
    return next(_candidates(g, w), None) is None


def normalize(g: OrientedGraph, w: Word, max_len: int = MAX_WORD_LEN) -> Word:
    """Apply the first available cancellation until none applies."""
    w = tuple(w)
    check_length(w, max_len)
    while True:
        step = next(_candidates(g, w), None)
        if step is None:
            return w
        w = step.apply(w)


def normalize_randomized(g: OrientedGraph, w: Word, seed: int,
                         max_len: int = MAX_WORD_LEN) -> Word:
    rng = random.Random(seed)
    w = tuple(w)
    check_length(w, max_len)
    while True:
        options = cancellation_candidates(g, w)
        if not options:
            return w
        w = rng.choice(options).apply(w)


def trace_canonical(g: OrientedGraph, w: Word) -> Word:
    """Lexicographically least word reachable from ``w`` by commutations.

    Greedy: emit the smallest letter whose first occurrence is preceded only
    by letters disconnected from it, delete that occurrence, repeat.
    """
    rest = list(w)
    # closed[a]: letters that cannot move past an a (a itself and its neighbours)
    closed = [0] * (g.n + 1)
    for a in set(rest):
        closed[a] = g.out_masks[a] | g.in_masks[a] | 1 << (a - 1)
    out = []
    while rest:
        blocked = 0
        best = best_pos = None
        for pos, a in enumerate(rest):
            if not blocked >> (a - 1) & 1 and (best is None or a < best):
                best, best_pos = a, pos
            blocked |= closed[a]
            if blocked == g.full:
                break
        out.append(best)
        del rest[best_pos]
    return tuple(out)


def commutation_neighbours(g: OrientedGraph, w: Word) -> list[Word]:
    """Words one elementary commutation away from ``w``."""
    return [
        w[:k] + (w[k + 1], w[k]) + w[k + 2:]
        for k in range(len(w) - 1)
        if g.disconnected(w[k], w[k + 1])
    ]


def hk_canonical(g: OrientedGraph, w: Word, max_len: int = MAX_WORD_LEN) -> Word:
    """Canonical representative of the monoid element π(w)."""
    return trace_canonical(g, normalize(g, w, max_len))


def hk_equal(g: OrientedGraph, w1: Word, w2: Word, max_len: int = MAX_WORD_LEN) -> bool:
    if content(w1) != content(w2):
        return False
    return hk_canonical(g, w1, max_len) == hk_canonical(g, w2, max_len)


def is_idempotent_word(g: OrientedGraph, w: Word, max_len: int = MAX_WORD_LEN) -> bool:
    w = tuple(w)
    ww = w + w
    check_length(ww, max_len)
    return hk_equal(g, ww, w, max_len)


def is_quasi_subword(u: Word, w: Word) -> bool:
    letters = iter(w)
    return all(a in letters for a in u)


def bounded_elements(g: OrientedGraph, max_len: int) -> list[Word]:
    """Canonical forms of every element expressible by a word of length <= max_len."""
    if max_len > MAX_BOUNDED_LEN or g.n > MAX_BOUNDED_VERTICES:
        raise ValueError(
            f"bounded_elements is limited to max_len <= {MAX_BOUNDED_LEN}"
            f" and n <= {MAX_BOUNDED_VERTICES}"
        )
    found = set()
    for k in range(max_len + 1):
        for w in itertools.product(g.vertices, repeat=k):
            found.add(hk_canonical(g, w))
    return sorted(found, key=lambda w: (len(w), w))
