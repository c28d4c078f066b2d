import itertools

import pytest

from hkmonoid.graph import GraphError, OrientedGraph, members, predicate_p
from hkmonoid.idempotents import idempotent_word
from hkmonoid.kiselman import combine_law, epsilon_word, kiselman_graph, prop14_condition
from hkmonoid.words import hk_equal, is_idempotent_word
from strategies import S


def test_kiselman_graph():
    assert kiselman_graph(2).sorted_arrows() == [(2, 1)]
    assert kiselman_graph(1).arrows == frozenset()
    assert kiselman_graph(3).sorted_arrows() == [(2, 1), (3, 1), (3, 2)]
    assert kiselman_graph(4) == OrientedGraph(4, frozenset((i, j) for i in range(5) for j in range(1, i)))
    for bad in (0, 65):
        with pytest.raises(GraphError):
            kiselman_graph(bad)


def test_epsilon_word():
    assert epsilon_word(S(1, 3)) == (3, 1)
    assert epsilon_word(0) == ()
    assert epsilon_word(S(2)) == (2,)


def test_prop14_condition():
    assert prop14_condition(S(3), S(1, 2))
    assert not prop14_condition(S(1), S(2))
    assert prop14_condition(S(1, 2), S(1, 2))


def test_combine_law_examples():
    assert combine_law(0, 0)
    assert combine_law(S(1), S(2), 2)
    # the plain product is not idempotent here, only the combined forms
    assert not is_idempotent_word(kiselman_graph(2), epsilon_word(S(1)) + epsilon_word(S(2)))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_three_routes_agree(n):
    g = kiselman_graph(n)
    for x, y in itertools.product(range(1 << n), repeat=2):
        order = prop14_condition(x, y)
        assert order == predicate_p(g, x, y)
        prod = epsilon_word(x) + epsilon_word(y)
        assert order == is_idempotent_word(g, prod)
        if order:
            assert hk_equal(g, prod, epsilon_word(x | y))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_combine_law_exhaustive(n):
    assert all(combine_law(x, y, n) for x, y in itertools.product(range(1 << n), repeat=2))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_epsilon_matches_idempotent_word(n):
    g = kiselman_graph(n)
    for x in range(1 << n):
        assert epsilon_word(x) == idempotent_word(g, x).word
        assert list(epsilon_word(x)) == sorted(members(x), reverse=True)
