"""Idempotents e_X of HK_Θ and products of pairs of them."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    CycleError,
    OrientedGraph,
    acyclic_subsets,
    format_set,
    members,
    popcount,
    predicate_p,
    reachable,
    topological_order,
)
from .words import Word, content, format_word, hk_equal, is_idempotent_word


@dataclass(frozen=True)
class IdempotentHandle:
    support: int
    word: Word

    def __str__(self):
        return f"X = {format_set(self.support)} word = {format_word(self.word)}"


@dataclass(frozen=True)
class MnrsPartition:
    m: int
    n: int
    r: int
    s: int


def idempotent_word(g: OrientedGraph, x: int) -> IdempotentHandle:
    """The idempotent with content ``x``, written with arrows pointing left to right."""
    try:
        order = topological_order(g, x)
    except CycleError:
        raise ValueError(f"{format_set(x)} is not acyclic; no idempotent has this content") from None
    return IdempotentHandle(x, order[::-1])


def e(g: OrientedGraph, x: int) -> Word:
    return idempotent_word(g, x).word


def has_no_right_to_left_arrows(g: OrientedGraph, w: Word) -> bool:
    seen = 0
    for a in w:
        if g.out_masks[a] & seen:
            return False
        seen |= 1 << (a - 1)
    return True


def is_x_topological(g: OrientedGraph, w: Word, x: int) -> bool:
    return (
        content(w) == x
        and len(w) == popcount(x)
        and has_no_right_to_left_arrows(g, w)
    )


def enumerate_idempotents(g: OrientedGraph) -> list[IdempotentHandle]:
    return [idempotent_word(g, x) for x in acyclic_subsets(g)]


def product_is_idempotent(g: OrientedGraph, x: int, y: int) -> tuple[bool, bool]:
    """(p(x, y), whether e_x e_y is idempotent by rewriting). These should agree."""
    via_p = predicate_p(g, x, y)
    via_oracle = is_idempotent_word(g, e(g, x) + e(g, y))
    return via_p, via_oracle


def product_support_law(g: OrientedGraph, x: int, y: int) -> int | None:
    """Return x ∪ y when p(x, y) holds, after confirming e_x e_y = e_{x∪y}."""
    if not predicate_p(g, x, y):
        return None
    union = x | y
    # idempotent_word raises if the union is cyclic
    joined = e(g, union)
    if not hk_equal(g, e(g, x) + e(g, y), joined):
        raise AssertionError(
            f"e_X e_Y != e_(X∪Y) for X={format_set(x)}, Y={format_set(y)}"
        )
    return union


def braid_law(g: OrientedGraph, x: int, y: int) -> bool:
    """e_x e_y e_x = e_y e_x e_y = e_x e_y."""
    ex, ey = e(g, x), e(g, y)
    xy = ex + ey
    return hk_equal(g, xy + ex, xy) and hk_equal(g, ey + xy, xy)


def mnrs_partition(g: OrientedGraph, x: int, y: int) -> MnrsPartition:
    """Split x ∪ y into M = (y∖x) ⊔ R and N = (x∖y) ⊔ S.

    R holds the vertices of x ∩ y reachable from y∖x through a chain whose
    interior stays in x ∩ y; S is the rest of x ∩ y.
    """
    inter = x & y
    only_y = y & ~x
    # chains leave y∖x exactly once, then stay inside x ∩ y
    first_hop = 0
    for b in members(only_y):
        first_hop |= g.out_masks[b]
    r = reachable(g, first_hop & inter, inter)
    s = inter & ~r
    return MnrsPartition(m=only_y | r, n=(x & ~y) | s, r=r, s=s)


def arrows_between(g: OrientedGraph, source: int, target: int) -> list[tuple[int, int]]:
    return [(u, v) for u in members(source) for v in members(target) if g.has_arrow(u, v)]
