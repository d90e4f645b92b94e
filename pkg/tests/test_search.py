from __future__ import annotations

import json

import pytest

from imlab import generators as gen
from imlab import search
from imlab.errors import Graph6Error, NotApplicable
from imlab.graph6 import encode_graph6
from imlab.invariants import Limits


def test_empty_source():
    rep = search.scan(iter(()), ["all"])
    assert rep.graphs_scanned == 0 and rep.defects == [] and rep.problem1_witnesses == []
    assert rep.exit_code == search.EXIT_CLEAN


def test_small_exhaustive_scan_is_clean():
    rep = search.scan(search.exhaustive_source(5), ["thm1", "thm2", "chain1"])
    assert rep.graphs_checked == sum(2 ** (n * (n - 1) // 2) for n in range(1, 6))
    assert rep.defects == [] and rep.skipped == []
    assert search.LABELED_NOTE not in rep.notes


def test_filters():
    rep = search.scan(search.exhaustive_source(6, 6), ["conj1"], ["connected", "regular:3"])
    # labeled cubic graphs on 6 vertices: 60 copies of K_{3,3} and 10 of the prism
    assert rep.graphs_checked == 70 and rep.conjecture1_checked == 70
    assert rep.conjecture1_violations == []
    with pytest.raises(ValueError):
        search.scan(iter(()), ["all"], ["bogus"])


def test_unknown_check_rejected():
    with pytest.raises(ValueError):
        search.resolve_checks(["nope"])


def test_idom_vs_min_maximal_examples():
    assert search.check_conjecture1(gen.cycle(6)) == (2, 2, True)
    assert search.check_conjecture1(gen.petersen()) == (3, 3, True)
    assert search.check_conjecture1(gen.complete(4)) == (1, 2, True)
    with pytest.raises(NotApplicable):
        search.check_conjecture1(gen.path(3))


def test_degree_weighted_idom_examples():
    assert search.check_question1(gen.star(3)) == (1, 3, True)
    assert search.check_question1(gen.cycle(5)) == (4, 4, True)
    assert search.check_question1(gen.empty(3)) == (0, 0, True)


def test_degree_equality_witnesses_bipartite():
    kabs = [gen.complete_bipartite(a, b) for a in range(1, 5) for b in range(a, 5)]
    got = search.collect_equality_witnesses(search.graphs_source(kabs), "problem2")
    assert sorted(got) == sorted({encode_graph6(g) for g in kabs})


def test_cubic_alpha_mu_witnesses():
    got = search.collect_equality_witnesses(search.cubic_source(8), "problem1")
    assert encode_graph6(gen.complete(4)) not in got
    k33 = next(g for g in gen.connected_cubic_graphs(6) if g.is_bipartite())
    assert encode_graph6(k33) in got


def test_witness_collection_empty_source():
    assert search.collect_equality_witnesses(iter(()), "problem1") == []
    with pytest.raises(ValueError):
        search.collect_equality_witnesses(iter(()), "problem3")


def test_cubic_counts():
    assert [len(gen.connected_cubic_graphs(n)) for n in (4, 6, 8, 10)] == [1, 2, 5, 19]


def test_budget_skip_is_recorded_not_dropped():
    g = gen.random_regular(14, 3, seed=4)
    rep = search.scan(search.graphs_source([g]), ["conj1"], limits=Limits(nodes=2))
    assert rep.graphs_scanned == 1 and rep.graphs_checked == 0
    assert len(rep.skipped) == 1 and rep.defects == []


def test_graph6_source_reports_line_number():
    with pytest.raises(Graph6Error, match="line 2"):
        list(search.graph6_source(["Bw\n", "B!\n"]))


def test_report_is_worker_independent():
    src = list(search.random_source(120, 8, seed=3))
    a = search.scan(iter(src), ["all"], workers=1, batch_size=16).to_json()
    b = search.scan(iter(src), ["all"], workers=2, batch_size=16).to_json()
    assert a == b
    assert json.loads(a)["defects"] == []


def test_claim_discrepancies_are_not_defects():
    rep = search.scan(search.graphs_source([gen.complete(3), gen.cycle(5)]), ["annihilation", "thm3"])
    assert rep.defects == []
    assert {g for g, _ in rep.claim_discrepancies} == {"Bw", "Dhc"}
    assert rep.exit_code == search.EXIT_CLEAN


def test_per_graph_table():
    table = search.per_graph_table(search.graphs_source([gen.cycle(5), gen.petersen()]))
    lines = table.splitlines()
    assert len(lines) == 3 and lines[0].startswith("graph,")
