import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import edge_set, lexmin_form
from isolation_kit.exceptions import EdgeListError, GraphValidationError, UnsupportedError
from isolation_kit.graph import (
    canonical_form,
    closed_neighborhood,
    complete_graph,
    components,
    cycle_graph,
    delete_edges,
    delete_vertices,
    disjoint_union,
    edges_between,
    format_edge_list,
    is_isomorphic,
    make_graph,
    parse_edge_list,
    path_graph,
    relabel,
    star_graph,
)

C6 = cycle_graph(6)


def test_make_graph_basics():
    K3 = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert K3.m == 3 and K3 == complete_graph(3)
    P4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert P4.m == 3 and P4.edges() == [(0, 1), (1, 2), (2, 3)]
    K1 = make_graph(1, [])
    assert (K1.n, K1.m) == (1, 0)


def test_make_graph_dedups_symmetric_pairs():
    G = make_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert G.m == 1


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_make_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphValidationError):
        make_graph(3, edges)


def test_vertex_limit():
    with pytest.raises(GraphValidationError):
        make_graph(65, [])


def test_closed_neighborhood():
    assert closed_neighborhood(C6, {0}) == {5, 0, 1}
    assert closed_neighborhood(C6, set()) == frozenset()
    assert closed_neighborhood(star_graph(3), {0}) == {0, 1, 2, 3}
    with pytest.raises(GraphValidationError):
        closed_neighborhood(C6, {6})


def test_delete_vertices():
    h = delete_vertices(C6, closed_neighborhood(C6, {0}))
    assert h.back_map == (2, 3, 4)
    assert h.graph == path_graph(3)
    # edges of the handle map back onto host edges
    assert {(h.back_map[u], h.back_map[v]) for u, v in h.graph.edges()} == {(2, 3), (3, 4)}
    same = delete_vertices(C6, set())
    assert same.graph == C6 and same.back_map == tuple(range(6))
    assert delete_vertices(complete_graph(3), {0}).graph == complete_graph(2)


def test_delete_edges():
    assert is_isomorphic(delete_edges(complete_graph(3), {(0, 1)}), path_graph(3))
    assert is_isomorphic(delete_edges(C6, {(0, 1)}), path_graph(6))
    assert delete_edges(C6, set()) == C6
    with pytest.raises(GraphValidationError):
        delete_edges(C6, {(0, 2)})


def test_components():
    G = disjoint_union(path_graph(3), make_graph(1, []))
    parts = components(G)
    assert [h.graph.n for h in parts] == [3, 1]
    assert [h.back_map for h in parts] == [(0, 1, 2), (3,)]
    assert [h.graph for h in components(C6)] == [C6]
    assert components(make_graph(0, [])) == []


def test_edges_between():
    assert edges_between(C6, {0}, {1, 5}) == {(0, 1), (0, 5)}
    assert edges_between(C6, {0}, {2, 3}) == set()
    assert edges_between(C6, set(range(6)), set(range(6))) == set(C6.edges())


def test_isomorphism_examples():
    assert is_isomorphic(C6, relabel(C6, [3, 1, 5, 0, 2, 4]))
    assert not is_isomorphic(path_graph(4), star_graph(3))
    assert not is_isomorphic(complete_graph(3), path_graph(3))


def test_canonical_form_examples():
    P4 = path_graph(4)
    assert canonical_form(P4) == canonical_form(relabel(P4, [2, 0, 3, 1]))
    assert canonical_form(P4) != canonical_form(cycle_graph(4))
    assert canonical_form(make_graph(1, [])) == b"\x01"
    with pytest.raises(UnsupportedError):
        canonical_form(path_graph(9))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6), st.randoms(use_true_random=False))
def test_canonical_form_invariant_and_matches_literal_definition(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    H = relabel(G, perm)
    assert canonical_form(G) == canonical_form(H)
    literal = lexmin_form(G.n, edge_set(G))
    bits = 0
    for b in literal:
        bits = bits << 1 | b
    nbytes = (len(literal) + 7) // 8
    assert canonical_form(G) == bytes([G.n]) + (bits << (nbytes * 8 - len(literal))).to_bytes(nbytes, "big")


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_agrees_with_canonical_form(G, H):
    assert is_isomorphic(G, H) == (canonical_form(G) == canonical_form(H))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8), st.data())
def test_neighborhood_and_component_properties(G, data):
    X = data.draw(st.sets(st.integers(0, max(G.n - 1, 0)), max_size=G.n)) if G.n else set()
    N = closed_neighborhood(G, X)
    assert N >= X
    assert N == frozenset().union(*(closed_neighborhood(G, {x}) for x in X)) if X else N == frozenset()
    parts = components(G)
    covered = [v for h in parts for v in h.back_map]
    assert sorted(covered) == list(range(G.n))
    assert sum(h.graph.m for h in parts) == G.m
    assert all(h.graph.is_connected() for h in parts)
    # deleting N[X] then splitting commutes with the back maps
    rest = delete_vertices(G, N)
    for h in components(rest.graph):
        for u, v in h.graph.edges():
            assert G.has_edge(rest.back_map[h.back_map[u]], rest.back_map[h.back_map[v]])


def test_edge_list_round_trip(tmp_path):
    text = format_edge_list(C6)
    assert text == "6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n"
    assert parse_edge_list(text) == C6
    assert parse_edge_list("# comment\n3 2\n1 0\n# another\n2 1\n") == path_graph(3)


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("3 1\n0 0\n", 2),
        ("3 1\n0 3\n", 2),
        ("3 2\n0 1\n1 0\n", 3),
        ("3 2\n0 1\n", 1),
        ("3 1\n0 x\n", 2),
        ("3 1\n0 1 2\n", 2),
        ("", 1),
    ],
)
def test_edge_list_errors_carry_line_numbers(text, lineno):
    with pytest.raises(EdgeListError) as err:
        parse_edge_list(text)
    assert err.value.lineno == lineno
    assert f"line {lineno}" in str(err.value)
