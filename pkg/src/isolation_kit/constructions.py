"""Extremal ``(m, F)``-special graphs and their verification.

Write ``m + 1 = q(k + 2) + r`` with ``0 <= r <= k + 1``.  A special graph has
``q`` constituents, each an F-copy plus a connection vertex joined to one
copy vertex, a tree on the connection vertices, and a connected ``r``-edge
remainder graph sharing only the last connection vertex.  Its isolation
number is exactly ``q``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .exact import iota_exact, is_isolating
from .exceptions import GraphValidationError
from .graph import Graph, induced_subgraph, is_isomorphic, iter_bits, make_graph, path_graph, to_mask
from .harness import _prufer_tree
from .patterns import Pattern, find_copy, special_kind

TREE_SHAPES = ("path", "star", "random")


@dataclass(frozen=True)
class SpecialGraphSpec:
    m: int
    k: int
    q: int
    r: int
    tree_shape: str
    tree_edges: tuple[tuple[int, int], ...]
    remainder: Graph
    attach: tuple[int, ...]
    pure: bool
    seed: int | None = None

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "q": self.q,
            "r": self.r,
            "tree_shape": self.tree_shape,
            "tree_edges": [list(e) for e in self.tree_edges],
            "remainder_edges": [list(e) for e in self.remainder.edges()],
            "remainder_vertices": self.remainder.n,
            "attach": list(self.attach),
            "pure": self.pure,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class BuiltSpecial:
    graph: Graph
    spec: SpecialGraphSpec
    constituent_vertex_sets: tuple[frozenset[int], ...]
    connections: tuple[int, ...]
    pattern_vertex_sets: tuple[frozenset[int], ...] = field(default=(), repr=False)

    def to_dict(self) -> dict:
        d = self.spec.to_dict()
        d["n"] = self.graph.n
        d["connections"] = list(self.connections)
        d["constituents"] = [sorted(s) for s in self.constituent_vertex_sets]
        return d


def quotient_remainder(m: int, k: int) -> tuple[int, int]:
    return divmod(m + 1, k + 2)


def _tree_edges(q: int, shape: str, rng: random.Random) -> list[tuple[int, int]]:
    if shape == "path":
        return [(i, i + 1) for i in range(q - 1)]
    if shape == "star":
        return [(0, i) for i in range(1, q)]
    if shape == "random":
        return _prufer_tree(q, rng) if q >= 1 else []
    raise GraphValidationError(f"unknown tree shape {shape!r}; choose from {', '.join(TREE_SHAPES)}")


def _resolve_remainder(remainder, edges_needed: int) -> Graph:
    if isinstance(remainder, Graph):
        if remainder.m != edges_needed:
            raise GraphValidationError(
                f"remainder graph has {remainder.m} edges, construction needs {edges_needed}"
            )
        if remainder.n == 0 or not remainder.is_connected():
            raise GraphValidationError("remainder graph must be connected and non-empty")
        return remainder
    if remainder == "edgeless":
        if edges_needed:
            raise GraphValidationError(
                f"an edgeless remainder needs m + 1 divisible by k + 2 (remainder would need {edges_needed} edges)"
            )
        return make_graph(1, [])
    if remainder == "path":
        return path_graph(edges_needed + 1)
    raise GraphValidationError(f"unknown remainder option {remainder!r}")


def build_special(
    F: Pattern,
    m: int,
    tree: str = "path",
    remainder: Graph | str = "edgeless",
    attach: str = "dominator",
    seed: int | None = None,
) -> BuiltSpecial:
    """Build an ``(m, F)``-special graph.

    Args:
        F: the pattern.
        m: target edge count.
        tree: shape of the tree on the connection vertices: ``"path"``,
            ``"star"`` or ``"random"`` (Prüfer sequence from ``seed``).
        remainder: a connected graph with ``r`` edges whose vertex 0 is
            identified with the last connection vertex, ``"edgeless"`` (pure
            build, needs ``r = 0``) or ``"path"`` (an ``r``-edge path).  When
            ``q = 0`` the remainder is the whole graph and needs ``m`` edges.
        attach: ``"dominator"`` joins each connection to a dominating vertex
            of its copy; ``"random"`` picks any copy vertex using ``seed``.

    Raises:
        GraphValidationError: for negative ``m``, an unknown option, or a
            remainder with the wrong edge count or disconnected.
    """
    if m < 0:
        raise GraphValidationError("m must be non-negative")
    if attach not in ("dominator", "random"):
        raise GraphValidationError(f"unknown attach option {attach!r}")
    k, ell = F.k, F.ell
    q, r = quotient_remainder(m, k)
    rng = random.Random(seed)

    if q == 0:
        rem = _resolve_remainder(remainder, m)
        spec = SpecialGraphSpec(m, k, 0, r, tree, (), rem, (), rem.m == 0, seed)
        return BuiltSpecial(rem, spec, (), ())

    edges: list[tuple[int, int]] = []
    connections = []
    constituents = []
    copies = []
    attach_points = []
    for i in range(q):
        vi = i * (ell + 1)
        base = vi + 1
        edges.extend((base + a, base + b) for a, b in F.f.edges())
        w = F.dominators[0] if attach == "dominator" else rng.randrange(ell)
        edges.append((vi, base + w))
        connections.append(vi)
        attach_points.append(base + w)
        copy = frozenset(range(base, base + ell))
        copies.append(copy)
        constituents.append(copy | {vi})
    tree_idx = _tree_edges(q, tree, rng)
    tree_edges = tuple((connections[a], connections[b]) for a, b in tree_idx)
    edges.extend(tree_edges)

    rem = _resolve_remainder(remainder, r)
    n = q * (ell + 1)
    vq = connections[-1]
    ids = [vq] + list(range(n, n + rem.n - 1))
    edges.extend((ids[a], ids[b]) for a, b in rem.edges())
    n += rem.n - 1

    G = make_graph(n, edges)
    spec = SpecialGraphSpec(m, k, q, r, tree, tree_edges, rem, tuple(attach_points), rem.m == 0, seed)
    return BuiltSpecial(G, spec, tuple(constituents), tuple(connections), tuple(copies))


def special_checks(b: BuiltSpecial, F: Pattern, exact_limit: int = 14) -> dict[str, bool | int | None]:
    """Individual checks behind :func:`verify_special`.

    ``structure``: connected, ``m`` edges, and every constituent is an
    F-copy joined by one edge to its connection vertex with no other outside
    neighbours.  ``upper``: ``iota <= q`` (the connections isolate, or the
    exact value says so).  ``lower``: the constituents force ``iota >= q``.
    ``exact``: the exact value when the graph is small enough, else None.
    """
    G, spec = b.graph, b.spec
    q = spec.q
    out: dict[str, bool | int | None] = {}
    structure = G.is_connected() and G.m == spec.m and (q, spec.r) == quotient_remainder(spec.m, F.k)
    seen = 0
    for vi, con, copy in zip(b.connections, b.constituent_vertex_sets, b.pattern_vertex_sets):
        cmask = to_mask(con)
        pmask = to_mask(copy)
        if cmask & seen:
            structure = False
        seen |= cmask
        if not is_isomorphic(induced_subgraph(G, pmask).graph, F.f):
            structure = False
        if (G.adj[vi] & pmask).bit_count() != 1:
            structure = False
        if any(G.adj[u] & ~cmask for u in iter_bits(pmask)):
            structure = False
    if len(b.connections) != q:
        structure = False
    out["structure"] = structure

    exact = iota_exact(G, F).iota if G.n <= exact_limit else None
    out["exact"] = exact
    if q == 0:
        out["upper"] = find_copy(G, F) is None
    else:
        out["upper"] = is_isolating(G, F, b.connections) or (exact is not None and exact <= q)
    # each copy's closed neighbourhood stays inside its constituent and the
    # constituents are disjoint, so every isolating set meets each of them
    out["lower"] = structure
    return out


def verify_special(b: BuiltSpecial, F: Pattern, exact_limit: int = 14) -> bool:
    """True iff the build is a valid special graph with isolation number ``q``."""
    checks = special_checks(b, F, exact_limit)
    ok = bool(checks["structure"] and checks["upper"] and checks["lower"])
    if checks["exact"] is not None:
        ok = ok and checks["exact"] == b.spec.q
    if b.spec.q == 0:
        ok = ok and special_kind(b.graph, F) is None
    return ok
