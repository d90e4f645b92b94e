from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_networkx
from imlab import generators as gen
from imlab.errors import BudgetExceeded
from imlab.graph import from_edge_list
from imlab.matching import (bipartite_matching, brute_matching_number, is_maximal_matching, matching_number,
                            maximum_matching, minimum_maximal_matching)


def _brute_min_maximal(g) -> int:
    edges = g.edges()
    for k in range(len(edges) + 1):
        for sub in combinations(edges, k):
            if g.is_matching(sub) and is_maximal_matching(g, sub):
                return k
    raise AssertionError("unreachable")


def test_maximum_matching_examples():
    assert len(maximum_matching(gen.complete(7))) == 3
    assert maximum_matching(gen.empty(5)) == ()
    assert len(maximum_matching(gen.petersen())) == 5


def test_brute_matching_examples():
    assert brute_matching_number(gen.cycle(5)) == 2
    assert brute_matching_number(gen.complete(4)) == 2
    assert brute_matching_number(gen.empty(3)) == 0


def test_brute_matching_refuses_large_input():
    with pytest.raises(BudgetExceeded):
        brute_matching_number(gen.complete(8))


def test_blossom_needed():
    # two triangles joined by a path: greedy augmentation without blossoms fails here
    g = from_edge_list(8, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)])
    assert matching_number(g) == 4


@given(graphs(max_n=10))
@settings(max_examples=300)
def test_blossom_agrees_with_networkx(g):
    m = maximum_matching(g)
    assert g.is_matching(m)
    assert len(m) == len(nx.max_weight_matching(to_networkx(g), maxcardinality=True))


@given(graphs(max_n=7))
@settings(max_examples=200)
def test_blossom_agrees_with_brute_force(g):
    assert matching_number(g) == brute_matching_number(g)


def test_minimum_maximal_matching_examples():
    assert minimum_maximal_matching(gen.path(4)) == ((1, 2),)
    assert len(minimum_maximal_matching(gen.cycle(5))) == 2
    assert minimum_maximal_matching(gen.empty(4)) == ()


@given(graphs(max_n=7))
@settings(max_examples=150)
def test_minimum_maximal_matching_against_brute_force(g):
    m = minimum_maximal_matching(g)
    assert g.is_matching(m) and is_maximal_matching(g, m)
    assert len(m) == _brute_min_maximal(g)


def test_minimum_maximal_matching_budget():
    with pytest.raises(BudgetExceeded):
        minimum_maximal_matching(gen.random_regular(20, 3, seed=1), budget=5)


def test_bipartite_matching():
    found = bipartite_matching([0, 1, 2], {0: [10, 11], 1: [10], 2: [11, 12]})
    assert len(found) == 3 and len(set(found.values())) == 3
    assert len(bipartite_matching([0, 1], {0: [5], 1: [5]})) == 1
