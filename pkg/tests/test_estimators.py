import networkx as nx
import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from isolation_kit import GraphIsolator
from isolation_kit.exceptions import GraphValidationError, SpecialPairInput
from isolation_kit.graph import cycle_graph, path_graph
from isolation_kit.validation import check_graph, check_pattern


def test_params_round_trip():
    est = GraphIsolator(pattern="k3", method="exact")
    assert est.get_params() == {"pattern": "k3", "method": "exact", "fallback_exact": False}
    est.set_params(method="proof")
    twin = clone(est)
    assert twin.get_params()["method"] == "proof" and not hasattr(twin, "isolating_set_")


def test_fit_predict_transform():
    G = path_graph(7)
    est = GraphIsolator(pattern="p3").fit(G)
    assert est.method_ == "proof" and est.bound_ == 1
    labels = est.predict(G)
    assert labels.shape == (7,) and labels.sum() == len(est.isolating_set_) == 1
    rest = est.transform(G)
    assert rest.graph.n == 4 and all(d <= 1 for d in rest.graph.degree_sequence())


def test_methods():
    C6 = cycle_graph(6)
    assert GraphIsolator(pattern="p3", method="exact").fit(C6).method_ == "oracle"
    assert GraphIsolator(pattern="k1").fit(C6).method_ == "oracle"
    with pytest.raises(SpecialPairInput):
        GraphIsolator(pattern="p3").fit(C6)
    est = GraphIsolator(pattern="p3", fallback_exact=True).fit(C6)
    assert est.method_ == "oracle" and len(est.isolating_set_) == 2
    with pytest.raises(ValueError):
        GraphIsolator(method="fast").fit(C6)


def test_unfitted_and_mismatch():
    with pytest.raises(NotFittedError):
        GraphIsolator().predict(path_graph(3))
    est = GraphIsolator().fit(path_graph(5))
    with pytest.raises(GraphValidationError):
        est.predict(path_graph(4))


def test_check_graph_inputs():
    A = np.zeros((4, 4), dtype=int)
    for u, v in [(0, 1), (1, 2), (2, 3)]:
        A[u, v] = A[v, u] = 1
    assert check_graph(A) == path_graph(4)
    assert check_graph(A.tolist()) == path_graph(4)
    assert check_graph(nx.path_graph(["a", "b", "c", "d"])) == path_graph(4)
    est = GraphIsolator(pattern=nx.path_graph(3)).fit(nx.cycle_graph(7))
    assert est.pattern_.k == 2 and len(est.isolating_set_) <= 2


@pytest.mark.parametrize("bad,message", [
    (np.zeros((2, 3)), "square"),
    (np.array([[0, 2], [2, 0]]), "0 or 1"),
    (np.array([[0, 1], [0, 0]]), "symmetric"),
    (np.eye(2, dtype=int), "diagonal"),
])
def test_check_graph_rejects(bad, message):
    with pytest.raises(GraphValidationError, match=message):
        check_graph(bad)


def test_check_graph_rejects_directed():
    with pytest.raises(GraphValidationError, match="directed"):
        check_graph(nx.DiGraph([(0, 1)]))


def test_check_pattern_sources(tmp_path):
    path = tmp_path / "fan.txt"
    path.write_text("4 4\n0 1\n0 2\n0 3\n1 2\n")
    F = check_pattern(str(path))
    assert F.k == 4 and F.name == "fan.txt"
    with pytest.raises(GraphValidationError):
        check_pattern("unknown")


def test_module_doctest():
    import doctest

    from isolation_kit import estimators

    assert doctest.testmod(estimators).failed == 0
