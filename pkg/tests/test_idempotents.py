import itertools

import pytest
from hypothesis import given, strategies as st

import oracles
from hkmonoid.graph import OrientedGraph, acyclic_subsets, members, predicate_p
from hkmonoid.idempotents import (
    arrows_between,
    braid_law,
    e,
    enumerate_idempotents,
    idempotent_word,
    is_x_topological,
    mnrs_partition,
    product_is_idempotent,
    product_support_law,
)
from hkmonoid.words import cancellation_candidates, hk_equal, is_idempotent_word
from strategies import ARROW12, CYCLE3, PATH3, S, SMALL_GRAPHS, graphs


def test_idempotent_word_examples():
    assert idempotent_word(PATH3, S(1, 2, 3)).word == (1, 2, 3)
    assert idempotent_word(PATH3, 0).word == ()
    # reverse of the tie-broken order (1, 3); both letter orders are the same element
    assert idempotent_word(PATH3, S(1, 3)).word == (3, 1)
    assert hk_equal(PATH3, (3, 1), (1, 3))
    assert str(idempotent_word(PATH3, S(1, 3))) == "X = {1,3} word = 3 1"
    with pytest.raises(ValueError):
        idempotent_word(CYCLE3, S(1, 2, 3))


def test_is_x_topological_examples():
    assert is_x_topological(ARROW12, (1, 2), S(1, 2))
    assert not is_x_topological(ARROW12, (2, 1), S(1, 2))
    assert not is_x_topological(ARROW12, (1, 1), S(1))


@given(graphs(max_n=5), st.data())
def test_idempotent_word_is_topological_normal_and_idempotent(g, data):
    x = data.draw(st.sampled_from(acyclic_subsets(g)))
    h = idempotent_word(g, x)
    assert h.support == x
    assert is_x_topological(g, h.word, x)
    assert cancellation_candidates(g, h.word) == []
    assert is_idempotent_word(g, h.word)


def test_all_topological_words_are_equal():
    for g in SMALL_GRAPHS:
        for x in acyclic_subsets(g):
            topo = [w for w in itertools.permutations(members(x)) if is_x_topological(g, w, x)]
            assert topo
            for w in topo:
                assert hk_equal(g, w, e(g, x))


def test_enumerate_idempotents_counts():
    assert len(enumerate_idempotents(CYCLE3)) == 7
    assert len(enumerate_idempotents(PATH3)) == 8
    assert [h.word for h in enumerate_idempotents(OrientedGraph(1))] == [(), (1,)]


def test_product_examples():
    assert product_is_idempotent(ARROW12, S(1), S(2)) == (True, True)
    assert product_is_idempotent(ARROW12, S(2), S(1)) == (False, False)
    for x in acyclic_subsets(PATH3):
        assert product_is_idempotent(PATH3, x, x) == (True, True)


def test_support_law_examples():
    assert product_support_law(ARROW12, S(1), S(2)) == S(1, 2)
    assert product_support_law(ARROW12, S(2), S(1)) is None
    for y in acyclic_subsets(CYCLE3):
        assert product_support_law(CYCLE3, 0, y) == y


def test_braid_examples():
    assert braid_law(ARROW12, S(1), S(2))
    assert not braid_law(ARROW12, S(2), S(1))
    for x in acyclic_subsets(CYCLE3):
        assert braid_law(CYCLE3, x, x)


def test_mnrs_examples():
    part = mnrs_partition(PATH3, S(1, 2), S(2, 3))
    assert (part.m, part.n, part.r, part.s) == (S(3), S(1, 2), 0, S(2))
    assert not arrows_between(PATH3, part.m, part.n)
    assert predicate_p(PATH3, S(1, 2), S(2, 3))

    part = mnrs_partition(PATH3, S(2, 3), S(1, 2))
    assert (part.m, part.n, part.r, part.s) == (S(1, 2), S(3), S(2), 0)
    assert arrows_between(PATH3, part.m, part.n) == [(2, 3)]
    assert not predicate_p(PATH3, S(2, 3), S(1, 2))

    x = S(1, 2)
    part = mnrs_partition(PATH3, x, x)
    assert (part.m, part.n, part.r, part.s) == (0, x, 0, x)


def _r_by_chains(g, x, y):
    # R straight from its definition: chains b -> i_1 -> ... -> i with interior in X ∩ Y
    inter = set(members(x & y))
    only_y = set(members(y & ~x))
    first = {v for b in only_y for v in inter if g.has_arrow(b, v)}
    return oracles.bfs_reach(g.n, g.arrows, first, inter)


@given(graphs(max_n=6), st.data())
def test_mnrs_matches_definition(g, data):
    sets = acyclic_subsets(g)
    x = data.draw(st.sampled_from(sets))
    y = data.draw(st.sampled_from(sets))
    part = mnrs_partition(g, x, y)
    assert set(members(part.r)) == _r_by_chains(g, x, y)
    assert part.m | part.n == x | y and not part.m & part.n
    if predicate_p(g, x, y):
        assert not arrows_between(g, part.m, part.n)


def test_join_products_are_idempotent():
    # e_{X∪Y} e_X and e_Y e_{X∪Y} are idempotent whenever X ∪ Y is acyclic
    for g in SMALL_GRAPHS:
        sets = set(acyclic_subsets(g))
        for x, y in itertools.product(sets, repeat=2):
            if x | y in sets:
                assert is_idempotent_word(g, e(g, x | y) + e(g, x))
                assert is_idempotent_word(g, e(g, y) + e(g, x | y))
