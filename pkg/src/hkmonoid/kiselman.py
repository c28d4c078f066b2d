"""The Kiselman monoid K_n as HK_Θ over the complete acyclic graph i -> j iff i > j.

The closed formulas here (decreasing-order idempotent words, the pairwise
order condition) never touch graph search, so they serve as an independent
check on the general machinery.
"""

from __future__ import annotations

from .graph import MAX_VERTICES, GraphError, OrientedGraph, members
from .words import Word, is_idempotent_word


def kiselman_graph(n: int) -> OrientedGraph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"Kiselman graph needs 1 <= n <= {MAX_VERTICES}, got {n}")
    return OrientedGraph(n, frozenset((i, j) for i in range(1, n + 1) for j in range(1, i)))


def epsilon_word(x: int) -> Word:
    """Letters of ``x`` in strictly decreasing order; the unit for the empty set."""
    return members(x)[::-1]


def prop14_condition(x: int, y: int) -> bool:
    """Every element of x∖y exceeds every element of y∖x."""
    only_x = members(x & ~y)
    only_y = members(y & ~x)
    if not only_x or not only_y:
        return True
    return min(only_x) > max(only_y)


def combine_law(x: int, y: int, n: int | None = None) -> bool:
    """Both ε_{x∪y} ε_x and ε_y ε_{x∪y} are idempotent in K_n (by rewriting)."""
    if n is None:
        n = max(members(x | y), default=1)
    g = kiselman_graph(n)
    ex, ey, exy = epsilon_word(x), epsilon_word(y), epsilon_word(x | y)
    return is_idempotent_word(g, exy + ex) and is_idempotent_word(g, ey + exy)
