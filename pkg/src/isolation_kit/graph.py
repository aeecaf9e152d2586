"""Simple undirected graphs on vertices ``0..n-1`` with bitmask adjacency.

Vertex sets are plain ``frozenset[int]``.  Every operation that deletes
vertices relabels the survivors densely and returns a :class:`SubgraphHandle`
whose ``back_map`` translates new ids to the ids of the host graph.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from .exceptions import EdgeListError, GraphValidationError, UnsupportedError

MAX_VERTICES = 64
CANONICAL_LIMIT = 8

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is an int bitmask of the neighbours of ``v``.  Build instances
    with :func:`make_graph` (or :meth:`from_masks` when the masks are already
    known to be valid).
    """

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> Graph:
        masks = tuple(masks)
        if len(masks) > MAX_VERTICES:
            raise GraphValidationError(f"graph has {len(masks)} vertices, limit is {MAX_VERTICES}")
        return cls(len(masks), masks)

    @cached_property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((a.bit_count() for a in self.adj), reverse=True))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return _reach(self, 1, self.full_mask) == self.full_mask

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class SubgraphHandle:
    """A relabeled induced subgraph together with its map back to the host."""

    graph: Graph
    back_map: tuple[int, ...]

    def lift(self, vertices: Iterable[int]) -> frozenset[int]:
        """Translate sub-graph vertex ids to host ids."""
        return frozenset(self.back_map[v] for v in vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.back_map)


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def make_graph(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Build a graph on ``0..n-1`` from vertex pairs; duplicates are merged.

    Raises:
        GraphValidationError: on a self-loop, an out-of-range endpoint or a
            vertex count above :data:`MAX_VERTICES`.
    """
    if n < 0:
        raise GraphValidationError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise GraphValidationError(f"graph has {n} vertices, limit is {MAX_VERTICES}")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphValidationError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphValidationError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def check_vertex_set(G: Graph, X: Iterable[int]) -> frozenset[int]:
    X = frozenset(X)
    bad = [x for x in X if not (isinstance(x, int) and 0 <= x < G.n)]
    if bad:
        raise GraphValidationError(f"vertices {sorted(bad)} are not in 0..{G.n - 1}")
    return X


def closed_neighborhood(G: Graph, X: Iterable[int]) -> frozenset[int]:
    """``N[X]``: the vertices of ``X`` together with all their neighbours."""
    return frozenset(iter_bits(closed_neighborhood_mask(G, to_mask(check_vertex_set(G, X)))))


def closed_neighborhood_mask(G: Graph, mask: int) -> int:
    out = mask
    for v in iter_bits(mask):
        out |= G.adj[v]
    return out


def induced_subgraph(G: Graph, keep_mask: int) -> SubgraphHandle:
    """Induced subgraph on the vertices in ``keep_mask``, relabeled in increasing order."""
    back_map = tuple(iter_bits(keep_mask & G.full_mask))
    index = {old: new for new, old in enumerate(back_map)}
    adj = []
    for old in back_map:
        mask = 0
        for w in iter_bits(G.adj[old] & keep_mask):
            mask |= 1 << index[w]
        adj.append(mask)
    return SubgraphHandle(Graph(len(back_map), tuple(adj)), back_map)


def delete_vertices(G: Graph, X: Iterable[int]) -> SubgraphHandle:
    """``G - X`` as a relabeled handle."""
    X = check_vertex_set(G, X)
    return induced_subgraph(G, G.full_mask & ~to_mask(X))


def delete_edges(G: Graph, Y: Iterable[Iterable[int]]) -> Graph:
    """``G - Y`` for a set of edges ``Y``; the vertex set is unchanged.

    Raises:
        GraphValidationError: if a pair in ``Y`` is not an edge of ``G``.
    """
    adj = list(G.adj)
    for pair in Y:
        u, v = pair
        if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
            raise GraphValidationError(f"({u}, {v}) is not an edge of the graph")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(G.n, tuple(adj))


def _reach(G: Graph, seed: int, within: int) -> int:
    seen = seed
    frontier = seed
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= G.adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def component_masks(G: Graph, within: int | None = None) -> list[int]:
    """Vertex masks of the components of ``G[within]``, ordered by smallest vertex."""
    remaining = G.full_mask if within is None else within & G.full_mask
    out = []
    while remaining:
        low = remaining & -remaining
        comp = _reach(G, low, remaining)
        out.append(comp)
        remaining &= ~comp
    return out


def components(G: Graph) -> list[SubgraphHandle]:
    """Connected components, ordered by their smallest vertex id."""
    return [induced_subgraph(G, mask) for mask in component_masks(G)]


def edges_between(G: Graph, X: Iterable[int], Y: Iterable[int]) -> set[Edge]:
    """Edges with one end in ``X`` and the other in ``Y``, as sorted pairs."""
    X = check_vertex_set(G, X)
    ymask = to_mask(check_vertex_set(G, Y))
    out = set()
    for x in X:
        for y in iter_bits(G.adj[x] & ymask):
            out.add((min(x, y), max(x, y)))
    return out


def relabel(G: Graph, order: Iterable[int]) -> Graph:
    """Graph whose vertex ``i`` is vertex ``order[i]`` of ``G``."""
    order = list(order)
    if sorted(order) != list(range(G.n)):
        raise GraphValidationError("relabeling must be a permutation of the vertices")
    pos = {old: new for new, old in enumerate(order)}
    return make_graph(G.n, [(pos[u], pos[v]) for u, v in G.edges()])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for H in graphs:
        edges.extend((u + offset, v + offset) for u, v in H.edges())
        offset += H.n
    return make_graph(offset, edges)


# --- isomorphism -----------------------------------------------------------


def is_isomorphic(G: Graph, H: Graph) -> bool:
    """Brute-force isomorphism test with degree pruning (intended for small graphs)."""
    if G.n != H.n or G.m != H.m or G.degree_sequence() != H.degree_sequence():
        return False
    return find_isomorphism(G, H) is not None


def find_isomorphism(G: Graph, H: Graph) -> list[int] | None:
    """Return ``phi`` with ``phi[v]`` the image in ``H`` of vertex ``v`` of ``G``, or None."""
    if G.n != H.n or G.m != H.m:
        return None
    order = sorted(range(G.n), key=lambda v: -G.degree(v))
    phi = [-1] * G.n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        v = order[i]
        dv = G.degree(v)
        for w in range(H.n):
            if used >> w & 1 or H.degree(w) != dv:
                continue
            if any(G.has_edge(v, order[j]) != H.has_edge(w, phi[order[j]]) for j in range(i)):
                continue
            phi[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used &= ~(1 << w)
        phi[v] = -1
        return False

    return phi if extend(0) else None


def canonical_labeling(G: Graph) -> tuple[int, ...]:
    """Vertex order minimizing the upper-triangular adjacency bitstring.

    Pairs ``(i, j)``, ``i < j``, are read column by column (``j`` ascending,
    then ``i`` ascending), so each chosen position fixes a further block of
    the string; all partial orders achieving the minimal prefix are kept.
    """
    if G.n > CANONICAL_LIMIT:
        raise UnsupportedError(f"canonical form is limited to {CANONICAL_LIMIT} vertices, got {G.n}")
    states: list[tuple[tuple[int, ...], int]] = [((), 0)]
    for depth in range(G.n):
        best = None
        nxt = []
        for order, placed in states:
            for w in range(G.n):
                if placed >> w & 1:
                    continue
                col = 0
                for u in order:
                    col = (col << 1) | (G.adj[u] >> w & 1)
                if best is None or col < best:
                    best = col
                    nxt = [(order + (w,), placed | 1 << w)]
                elif col == best:
                    nxt.append((order + (w,), placed | 1 << w))
        states = nxt
    return states[0][0] if states else ()


def canonical_form(G: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (``n <= 8``).

    Layout: one byte holding ``n``, then the minimal bitstring packed
    big-endian into whole bytes.
    """
    order = canonical_labeling(G)
    bits = 0
    length = 0
    for j in range(1, G.n):
        for i in range(j):
            bits = (bits << 1) | G.has_edge(order[i], order[j])
            length += 1
    nbytes = (length + 7) // 8
    bits <<= nbytes * 8 - length
    return bytes([G.n]) + bits.to_bytes(nbytes, "big")


def canonicalize(G: Graph) -> Graph:
    """Relabel ``G`` into its canonical vertex order."""
    return relabel(G, canonical_labeling(G))


# --- named graphs ------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphValidationError("a cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with hub 0."""
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def is_cycle6(G: Graph) -> bool:
    return G.n == 6 and all(a.bit_count() == 2 for a in G.adj) and G.is_connected()


# --- edge-list text format ------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the ``"n m"`` header + ``"u v"`` lines format.

    Lines starting with ``#`` and blank lines are skipped.

    Raises:
        EdgeListError: with the 1-based line number of the first problem.
    """
    header = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    header_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListError("header counts must be non-negative", lineno)
            if a > MAX_VERTICES:
                raise EdgeListError(f"{a} vertices exceeds the limit of {MAX_VERTICES}", lineno)
            header = (a, b)
            header_line = lineno
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise EdgeListError(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}", lineno)
        if a == b:
            raise EdgeListError(f"self-loop at vertex {a}", lineno)
        e = (min(a, b), max(a, b))
        if e in seen:
            raise EdgeListError(f"duplicate edge ({e[0]}, {e[1]})", lineno)
        seen.add(e)
        edges.append(e)
    if header is None:
        raise EdgeListError("missing 'n m' header", 1)
    if len(edges) != header[1]:
        raise EdgeListError(f"header declares {header[1]} edges but {len(edges)} were listed", header_line)
    return make_graph(header[0], edges)


def format_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(G: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(G))
