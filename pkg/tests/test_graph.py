from __future__ import annotations

import io

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_networkx
from imlab import generators as gen
from imlab.errors import Graph6Error, GraphError
from imlab.graph import (Graph, closed_neighborhood, complement, format_edge_list, from_edge_list,
                         induced_subgraph, max_degree_subgraph, read_edge_lists, remove_edge)
from imlab.graph6 import HEADER, encode_graph6, parse_graph6, read_graph6_lines


def test_from_edge_list_single_edge():
    g = from_edge_list(2, [(0, 1)])
    assert g.m == 1 and g.has_edge(1, 0)


def test_from_edge_list_empty_graph():
    g = from_edge_list(5, [])
    assert g.n == 5 and g.min_degree == 0 and g.max_degree == 0


def test_duplicate_edges_collapse():
    assert from_edge_list(4, [(0, 1), (0, 1), (2, 3)]).m == 2
    assert from_edge_list(4, [(0, 1), (1, 0)]).m == 1


def test_loop_rejected():
    with pytest.raises(GraphError, match="loop"):
        from_edge_list(3, [(1, 1)])


def test_endpoint_out_of_range_rejected():
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 3)])


def test_asymmetric_adjacency_rejected():
    with pytest.raises(GraphError):
        Graph(2, [{1}, set()])


def test_graph_is_immutable():
    g = gen.path(3)
    with pytest.raises(AttributeError):
        g.n = 4


def test_closed_neighborhood():
    assert closed_neighborhood(gen.cycle(5), [0]) == (0, 1, 4)
    assert closed_neighborhood(gen.petersen(), []) == ()
    assert closed_neighborhood(gen.complete(4), [2]) == (0, 1, 2, 3)


def test_induced_subgraph():
    sub, index = induced_subgraph(gen.cycle(5), [0, 1, 2])
    assert sub == gen.path(3)
    assert index == {0: 0, 1: 1, 2: 2}
    sub, index = induced_subgraph(gen.complete(4), [0, 2])
    assert sub == gen.complete(2) and index == {0: 0, 2: 1}
    g = gen.petersen()
    assert induced_subgraph(g, range(10))[0] == g


def test_max_degree_subgraph():
    assert max_degree_subgraph(gen.star(3)).n == 1
    assert max_degree_subgraph(gen.cycle(6)) == gen.cycle(6)
    assert max_degree_subgraph(gen.path(4)) == gen.complete(2)


def test_structure_predicates():
    assert gen.cycle(6).is_bipartite() and not gen.cycle(5).is_bipartite()
    assert gen.path(5).is_connected() and not gen.empty(2).is_connected()
    assert gen.cycle(3).has_cycle() and not gen.path(6).has_cycle()
    assert gen.petersen().is_regular(3)


def test_remove_edge_and_complement():
    g = remove_edge(gen.complete(3), 0, 1)
    assert g == Graph(3, [{2}, {2}, {0, 1}])
    assert complement(gen.empty(4)) == gen.complete(4)


def test_generator_shapes():
    kab = gen.complete_bipartite(2, 5)
    assert kab.min_degree == 2 and kab.max_degree == 5
    c5 = gen.cycle(5)
    assert c5.is_regular(2) and c5.m == 5
    p = gen.petersen()
    assert nx.is_isomorphic(to_networkx(p), nx.petersen_graph())


def test_generator_parameter_errors():
    with pytest.raises(GraphError):
        gen.complete_bipartite(0, 3)
    with pytest.raises(GraphError):
        gen.random_regular(5, 3, seed=0)
    with pytest.raises(GraphError):
        gen.random_regular(4, 4, seed=0)


@pytest.mark.parametrize("seed", range(5))
def test_random_regular_is_regular_and_seeded(seed):
    g = gen.random_regular(10, 3, seed)
    assert all(d == 3 for d in g.degrees())
    assert g == gen.random_regular(10, 3, seed)


@pytest.mark.parametrize("p,q,r", [(2, 1, 3), (0, 2, 2), (1, 3, 1), (3, 4, 5)])
def test_gpqr_shape(p, q, r):
    g = gen.family_gpqr(p, q, r)
    lay = gen.gpqr_layout(p, q, r)
    assert g.n == 2 * p + q + r
    assert all(g.degree(v) == 1 + q for v in lay.pendants)
    assert g.is_independent(lay.outer)


def test_gpqr_parameter_error():
    with pytest.raises(GraphError):
        gen.family_gpqr(1, 2, 0)


def test_prism_with_isolates_as_drawn():
    g = gen.prism_with_isolates()
    assert g.n == 9 and g.m == 9
    assert [g.degree(v) for v in (6, 7, 8)] == [0, 0, 0]
    h = to_networkx(induced_subgraph(g, range(6))[0])
    assert nx.is_isomorphic(h, nx.circular_ladder_graph(3))


# -- graph6 -------------------------------------------------------------------

def test_graph6_examples():
    assert parse_graph6("A_") == gen.complete(2)
    assert parse_graph6("D??") == gen.empty(5)
    assert parse_graph6("Bw") == gen.complete(3)
    assert encode_graph6(gen.complete(2)) == "A_"
    assert encode_graph6(gen.empty(1)) == "@"


def test_graph6_header_and_whitespace():
    assert parse_graph6(HEADER + "Bw\n") == gen.complete(3)


@pytest.mark.parametrize("g", [gen.cycle(5), gen.petersen(), gen.family_gpqr(2, 1, 3), gen.empty(0)])
def test_graph6_round_trip_fixed(g):
    assert parse_graph6(encode_graph6(g)) == g


@given(graphs(max_n=14))
@settings(max_examples=200)
def test_graph6_matches_networkx_encoder(g):
    ours = encode_graph6(g)
    ref = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
    assert ours == ref
    assert parse_graph6(ours) == g


def test_graph6_bad_character_offset():
    with pytest.raises(Graph6Error, match="byte 1"):
        parse_graph6("B ")


def test_graph6_bad_length():
    with pytest.raises(Graph6Error, match="length"):
        parse_graph6("Bww")


def test_graph6_long_form_rejected():
    with pytest.raises(Graph6Error):
        parse_graph6("~?@?")


def test_graph6_encode_too_large():
    with pytest.raises(GraphError):
        encode_graph6(gen.empty(63))


def test_graph6_encode_max_supported():
    g = gen.path(62)
    assert parse_graph6(encode_graph6(g)) == g


def test_read_graph6_lines_skips_blank_lines():
    out = list(read_graph6_lines(["Bw\n", "\n", "A_\n"]))
    assert [ln for ln, _ in out] == [1, 3]


# -- edge lists ---------------------------------------------------------------

def test_edge_list_round_trip():
    text = format_edge_list(gen.petersen()) + format_edge_list(gen.empty(3))
    got = list(read_edge_lists(io.StringIO(text)))
    assert got == [gen.petersen(), gen.empty(3)]


def test_edge_list_error_has_line_number():
    with pytest.raises(GraphError, match="line 3"):
        list(read_edge_lists(["3 2\n", "0 1\n", "1 x\n"]))
