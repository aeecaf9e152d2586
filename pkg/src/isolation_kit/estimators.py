"""scikit-learn style front end.

>>> from isolation_kit import GraphIsolator
>>> from isolation_kit.graph import cycle_graph
>>> est = GraphIsolator(pattern="k3").fit(cycle_graph(6))
>>> est.isolating_set_
frozenset()
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .exact import iota_exact
from .exceptions import GraphValidationError, SolverError
from .graph import closed_neighborhood, delete_vertices
from .proof import bound, isolate
from .validation import check_graph, check_pattern

METHODS = ("auto", "proof", "exact")


class GraphIsolator(TransformerMixin, BaseEstimator):
    """Find an F-isolating set of a graph.

    Parameters
    ----------
    pattern : str, Pattern or graph-like, default="p3"
        Built-in pattern name (``k1 k2 p3 k3 k13 paw k4 k14``), path to an
        edge-list file, or any graph ``check_graph`` accepts.
    method : {"auto", "proof", "exact"}, default="auto"
        ``"proof"`` runs the constructive solver and guarantees
        ``|D| <= floor((m+1)/(k+2))``; ``"exact"`` returns a minimum set;
        ``"auto"`` uses the constructive solver when the pattern has at least
        two edges and the exact solver otherwise.
    fallback_exact : bool, default=False
        Recover with the exact solver when the constructive one rejects the
        input (special pair or invariant failure).

    Attributes
    ----------
    isolating_set_ : frozenset of int
    method_ : str
        ``"proof"`` or ``"oracle"``, whichever produced the set.
    bound_ : int
    certificate_ : Certificate or None
    n_vertices_in_ : int
    """

    def __init__(self, pattern="p3", method="auto", fallback_exact=False):
        self.pattern = pattern
        self.method = method
        self.fallback_exact = fallback_exact

    def fit(self, X, y=None):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        G = check_graph(X)
        F = check_pattern(self.pattern)
        self.pattern_ = F
        self.n_vertices_in_ = G.n
        self.bound_ = bound(G.m, F.k)
        self.certificate_ = None
        use_proof = self.method == "proof" or (self.method == "auto" and F.k >= 2)
        if use_proof:
            try:
                self.certificate_ = isolate(G, F)
            except SolverError:
                if not self.fallback_exact:
                    raise
        if self.certificate_ is not None:
            self.isolating_set_ = self.certificate_.vertices
            self.method_ = "proof"
        else:
            self.isolating_set_ = iota_exact(G, F).witness
            self.method_ = "oracle"
        return self

    def _check_same_graph(self, X):
        check_is_fitted(self, "isolating_set_")
        G = check_graph(X)
        if G.n != self.n_vertices_in_:
            raise GraphValidationError(
                f"graph has {G.n} vertices but the estimator was fitted on {self.n_vertices_in_}"
            )
        return G

    def predict(self, X):
        """0/1 membership of each vertex in the isolating set."""
        G = self._check_same_graph(X)
        out = np.zeros(G.n, dtype=int)
        out[sorted(self.isolating_set_)] = 1
        return out

    def transform(self, X):
        """The residual graph ``G - N[D]`` (as a handle mapping back to ``X``)."""
        G = self._check_same_graph(X)
        return delete_vertices(G, closed_neighborhood(G, self.isolating_set_))
