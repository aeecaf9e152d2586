"""Input coercion so solvers accept graphs from the wider ecosystem."""

from __future__ import annotations

import os

import numpy as np

from .exceptions import GraphValidationError
from .graph import Graph, SubgraphHandle, make_graph, read_edge_list
from .patterns import Pattern, builtin_pattern, make_pattern


def check_graph(X) -> Graph:
    """Coerce ``X`` to a :class:`Graph`.

    Accepted inputs: a ``Graph``; a ``SubgraphHandle``; a square symmetric
    0/1 adjacency matrix (anything ``numpy.asarray`` understands, including
    scipy sparse via ``.toarray()``); or a networkx-style graph exposing
    ``nodes`` and ``edges`` (vertices are relabeled in sorted order).
    """
    if isinstance(X, Graph):
        return X
    if isinstance(X, SubgraphHandle):
        return X.graph
    if hasattr(X, "nodes") and hasattr(X, "edges") and callable(getattr(X, "is_directed", None)):
        if X.is_directed():
            raise GraphValidationError("directed graphs are not supported")
        nodes = sorted(X.nodes)
        index = {u: i for i, u in enumerate(nodes)}
        return make_graph(len(nodes), [(index[u], index[v]) for u, v in X.edges])
    if hasattr(X, "toarray"):
        X = X.toarray()
    try:
        A = np.asarray(X)
    except Exception as exc:  # noqa: BLE001
        raise GraphValidationError(f"cannot interpret {type(X).__name__} as a graph") from exc
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise GraphValidationError(f"adjacency matrix must be square, got shape {A.shape}")
    if A.dtype == object or not np.isin(A, (0, 1)).all():
        raise GraphValidationError("adjacency matrix entries must be 0 or 1")
    if (A != A.T).any():
        raise GraphValidationError("adjacency matrix must be symmetric")
    if np.diagonal(A).any():
        raise GraphValidationError("adjacency matrix must have a zero diagonal (no self-loops)")
    rows, cols = np.nonzero(np.triu(A, 1))
    return make_graph(A.shape[0], zip(rows.tolist(), cols.tolist()))


def check_pattern(pattern) -> Pattern:
    """Coerce a built-in name, an edge-list path, a graph-like or a Pattern."""
    if isinstance(pattern, Pattern):
        return pattern
    if isinstance(pattern, str):
        try:
            return builtin_pattern(pattern)
        except GraphValidationError:
            if os.path.exists(pattern):
                return make_pattern(read_edge_list(pattern), name=os.path.basename(pattern))
            raise
    return make_pattern(check_graph(pattern))
