import dataclasses

import pytest

from isolation_kit.constructions import (
    build_special,
    quotient_remainder,
    special_checks,
    verify_special,
)
from isolation_kit.exact import iota_exact, is_isolating
from isolation_kit.exceptions import GraphValidationError
from isolation_kit.graph import make_graph, path_graph, star_graph
from isolation_kit.patterns import builtin_pattern
from isolation_kit.proof import bound


def test_quotient_remainder():
    assert quotient_remainder(7, 2) == (2, 0)
    assert quotient_remainder(9, 3) == (2, 0)
    assert quotient_remainder(10, 3) == (2, 1)


@pytest.mark.parametrize("name,m", [("p3", 7), ("k3", 9)])
def test_pure_builds(name, m):
    F = builtin_pattern(name)
    built = build_special(F, m)
    G = built.graph
    assert G.m == m and G.is_connected()
    assert built.spec.q == 2 and built.spec.pure
    assert G.n == 2 * (F.ell + 1)
    assert is_isolating(G, F, built.connections)
    assert iota_exact(G, F).iota == 2 == bound(m, F.k)
    assert verify_special(built, F)


@pytest.mark.parametrize("tree", ["path", "star", "random"])
@pytest.mark.parametrize("attach", ["dominator", "random"])
def test_edge_count_identity(tree, attach):
    F = builtin_pattern("paw")
    for m in range(0, 25):
        built = build_special(F, m, tree=tree, remainder="path", attach=attach, seed=m)
        q, r = built.spec.q, built.spec.r
        assert built.graph.m == m
        if q:
            assert m == q * (F.k + 1) + (q - 1) + r
            assert len(built.spec.tree_edges) == q - 1


def test_custom_remainder():
    F = builtin_pattern("k3")
    built = build_special(F, 11, remainder=star_graph(2))
    assert built.spec.r == 2 and built.graph.m == 11
    assert verify_special(built, F)


def test_q_zero():
    p3 = builtin_pattern("p3")
    # m = 2 with a P3 remainder: the graph is F itself
    built = build_special(p3, 2, remainder=path_graph(3))
    assert built.spec.q == 0
    assert not verify_special(built, p3)
    k3 = builtin_pattern("k3")
    built = build_special(k3, 2, remainder=path_graph(3))
    assert verify_special(built, k3)
    assert special_checks(built, k3)["exact"] == 0


def test_corrupted_build_is_rejected():
    F = builtin_pattern("p3")
    built = build_special(F, 11, tree="path")
    u, v = built.spec.tree_edges[0]
    edges = [e for e in built.graph.edges() if e != (u, v)]
    broken = dataclasses.replace(built, graph=make_graph(built.graph.n, edges))
    assert not verify_special(broken, F)
    assert not special_checks(broken, F)["structure"]


def test_invalid_inputs():
    F = builtin_pattern("p3")
    with pytest.raises(GraphValidationError, match="divisible"):
        build_special(F, 8)
    with pytest.raises(GraphValidationError, match="edges"):
        build_special(F, 8, remainder=path_graph(4))
    with pytest.raises(GraphValidationError, match="connected"):
        build_special(F, 8, remainder=make_graph(3, [(0, 1)]))
    with pytest.raises(GraphValidationError):
        build_special(F, 7, tree="cycle")
    with pytest.raises(GraphValidationError):
        build_special(F, -1)


def test_seeded_random_tree_is_deterministic():
    F = builtin_pattern("k13")
    a = build_special(F, 29, tree="random", attach="random", seed=5)
    b = build_special(F, 29, tree="random", attach="random", seed=5)
    assert a.graph == b.graph and a.to_dict() == b.to_dict()
