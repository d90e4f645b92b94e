from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_networkx
from imlab import generators as gen
from imlab.errors import BudgetExceeded
from imlab.graph import complement, from_edge_list
from imlab.independence import (all_maximal_independent_sets, all_maximum_independent_sets,
                                brute_independence_number, brute_independent_sets, core,
                                independence_number, independent_domination_number, is_well_covered,
                                maximum_independent_set)


def _nx_maximal_sets(g) -> set[tuple[int, ...]]:
    return {tuple(sorted(c)) for c in nx.find_cliques(to_networkx(complement(g)))} if g.n else {()}


def test_alpha_examples():
    assert independence_number(gen.empty(5)) == 5
    assert independence_number(gen.complete(7)) == 1
    assert independence_number(gen.cycle(5)) == 2
    assert independence_number(gen.petersen()) == 4


def test_maximum_independent_set_lex_smallest():
    assert maximum_independent_set(gen.cycle(5)) == (0, 2)
    assert maximum_independent_set(gen.complete(4)) == (0,)
    assert maximum_independent_set(gen.empty(0)) == ()


@given(graphs(max_n=11))
@settings(max_examples=300)
def test_alpha_agrees_with_oracles(g):
    a = independence_number(g)
    assert a == brute_independence_number(g)
    assert a == max((len(s) for s in _nx_maximal_sets(g)), default=0)
    s = maximum_independent_set(g)
    assert g.is_independent(s) and len(s) == a
    assert s == min(t for t in brute_independent_sets(g) if len(t) == a)


def test_all_maximum_sets_examples():
    assert all_maximum_independent_sets(gen.cycle(5)) == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
    assert all_maximum_independent_sets(gen.path(3)) == [(0, 2)]
    assert all_maximum_independent_sets(gen.complete(3)) == [(0,), (1,), (2,)]


@given(graphs(max_n=10))
@settings(max_examples=200)
def test_all_maximum_sets_agree_with_brute_force(g):
    a = independence_number(g)
    assert all_maximum_independent_sets(g) == sorted(s for s in brute_independent_sets(g) if len(s) == a)


def test_max_set_budget_is_loud():
    with pytest.raises(BudgetExceeded):
        # six disjoint edges: 2**6 maximum independent sets
        all_maximum_independent_sets(from_edge_list(12, [(2 * i, 2 * i + 1) for i in range(6)]), max_sets=10)


def test_core_examples():
    assert core(gen.path(3)) == (0, 2)
    assert core(gen.cycle(5)) == ()
    assert core(gen.family_gpqr(2, 1, 3)) == (5, 6, 7)
    assert core(gen.family_gpqr(0, 2, 2)) == (2, 3)


def test_maximal_sets_examples():
    p5 = all_maximal_independent_sets(gen.path(5))
    assert (1, 3) in p5 and (0, 2, 4) in p5
    assert all_maximal_independent_sets(gen.complete(4)) == [(0,), (1,), (2,), (3,)]
    assert all_maximal_independent_sets(gen.cycle(4)) == [(0, 2), (1, 3)]


@given(graphs(max_n=10))
@settings(max_examples=200)
def test_maximal_sets_agree_with_networkx(g):
    assert set(all_maximal_independent_sets(g)) == _nx_maximal_sets(g)


def test_well_covered_examples():
    assert is_well_covered(gen.cycle(5))
    assert not is_well_covered(gen.path(5))
    assert is_well_covered(gen.cycle(4))


def test_independent_domination_examples():
    assert independent_domination_number(gen.star(3)) == 1
    assert independent_domination_number(gen.cycle(5)) == 2
    assert independent_domination_number(gen.petersen()) == 3


@given(graphs(max_n=10))
@settings(max_examples=200)
def test_idom_and_well_covered_by_definition(g):
    sizes = [len(s) for s in _nx_maximal_sets(g)]
    assert independent_domination_number(g) == min(sizes)
    assert is_well_covered(g) == (min(sizes) == max(sizes))


@given(graphs(max_n=10))
@settings(max_examples=150)
def test_core_is_inside_every_maximum_set(g):
    c = set(core(g))
    sets = all_maximum_independent_sets(g)
    assert all(c <= set(s) for s in sets)
    assert g.is_independent(c)
