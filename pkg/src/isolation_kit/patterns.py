"""Patterns ``F`` with a dominating vertex, and F-copy detection in host graphs.

Copies are subgraphs, not induced subgraphs: extra host edges between the
image vertices never disqualify a match.  Because some vertex of ``F`` is
adjacent to every other vertex, each copy lies inside the closed
neighbourhood of the image of that vertex, which bounds the search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exceptions import GraphValidationError, UnsupportedError
from .graph import (
    Graph,
    complete_graph,
    is_cycle6,
    is_isomorphic,
    iter_bits,
    make_graph,
    path_graph,
    star_graph,
)

PATTERN_SIZE_LIMIT = 8


@dataclass(frozen=True)
class Pattern:
    f: Graph
    name: str = "F"
    dominators: tuple[int, ...] = field(default=(), compare=False)
    # matching order: a dominator first, then by decreasing degree
    order: tuple[int, ...] = field(default=(), compare=False, repr=False)
    # earlier[i]: pattern neighbours of order[i] placed before it
    earlier: tuple[tuple[int, ...], ...] = field(default=(), compare=False, repr=False)

    @property
    def k(self) -> int:
        return self.f.m

    @property
    def ell(self) -> int:
        return self.f.n

    @property
    def is_p3(self) -> bool:
        return self.ell == 3 and self.k == 2


@dataclass(frozen=True)
class CopyWitness:
    """An injective edge-preserving map ``V(F) -> V(G)``.

    ``mapping[i]`` is the host image of pattern vertex ``i``; ``center`` is the
    image of a dominator, so the whole copy lies in ``N_G[center]``.
    """

    mapping: tuple[int, ...]
    center: int

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.mapping)


def make_pattern(f: Graph, name: str = "F") -> Pattern:
    """Validate ``f`` as a pattern: connected, non-empty, with a dominating vertex.

    Raises:
        GraphValidationError: if ``f`` is empty, disconnected or has no
            vertex adjacent to all others.
        UnsupportedError: if ``f`` has more than :data:`PATTERN_SIZE_LIMIT` vertices.
    """
    if f.n == 0:
        raise GraphValidationError("pattern must have at least one vertex")
    if f.n > PATTERN_SIZE_LIMIT:
        raise UnsupportedError(f"patterns are limited to {PATTERN_SIZE_LIMIT} vertices, got {f.n}")
    if not f.is_connected():
        raise GraphValidationError("pattern must be connected")
    dominators = tuple(u for u in range(f.n) if f.degree(u) == f.n - 1)
    if not dominators:
        raise GraphValidationError("pattern lacks dominating vertex")
    first = dominators[0]
    rest = sorted((u for u in range(f.n) if u != first), key=lambda u: (-f.degree(u), u))
    order = (first, *rest)
    earlier = tuple(tuple(b for b in order[:i] if f.has_edge(a, b)) for i, a in enumerate(order))
    return Pattern(f=f, name=name, dominators=dominators, order=order, earlier=earlier)


def _match(G: Graph, F: Pattern, center: int, within: int) -> tuple[int, ...] | None:
    """Backtrack a copy of ``F`` with its first dominator sent to ``center``."""
    f = F.f
    order = F.order
    ell = F.ell
    cand_root = G.adj[center] & within
    if cand_root.bit_count() < ell - 1:
        return None
    phi = [-1] * ell
    phi[order[0]] = center
    earlier = F.earlier
    degs = [f.degree(a) for a in range(ell)]

    def extend(i: int, used: int) -> bool:
        if i == ell:
            return True
        a = order[i]
        cand = cand_root & ~used
        for b in earlier[i]:
            cand &= G.adj[phi[b]]
        for w in iter_bits(cand):
            if (G.adj[w] & within).bit_count() < degs[a]:
                continue
            phi[a] = w
            if extend(i + 1, used | 1 << w):
                return True
        phi[a] = -1
        return False

    if extend(1, 1 << center):
        return tuple(phi)
    return None


def find_copy(G: Graph, F: Pattern, within: int | None = None) -> CopyWitness | None:
    """First F-copy of ``G[within]`` in search order (centers ascending), or None."""
    within = G.full_mask if within is None else within & G.full_mask
    need = F.ell - 1
    for u in iter_bits(within):
        if (G.adj[u] & within).bit_count() < need:
            continue
        phi = _match(G, F, u, within)
        if phi is not None:
            return CopyWitness(phi, u)
    return None


def contains_copy(G: Graph, F: Pattern) -> CopyWitness | None:
    """A witness that ``G`` contains a subgraph isomorphic to ``F``, or None."""
    return find_copy(G, F)


def has_copy_within(G: Graph, F: Pattern, within: int) -> bool:
    return find_copy(G, F, within) is not None


def copy_centered_at(G: Graph, F: Pattern, u: int, within: int | None = None) -> CopyWitness | None:
    within = G.full_mask if within is None else within & G.full_mask
    if not within >> u & 1:
        return None
    phi = _match(G, F, u, within)
    return None if phi is None else CopyWitness(phi, u)


def find_copy_centers(G: Graph, F: Pattern) -> frozenset[int]:
    """Host vertices that dominate at least one F-copy.

    Any two dominators of ``F`` are twins, so trying the first one is enough.
    """
    need = F.ell - 1
    return frozenset(
        u for u in range(G.n) if G.degree(u) >= need and _match(G, F, u, G.full_mask) is not None
    )


def is_special_pair(G: Graph, F: Pattern) -> bool:
    """True iff ``G`` is an F-copy, or ``F`` is the 3-path and ``G`` a 6-cycle."""
    return special_kind(G, F) is not None


def special_kind(G: Graph, F: Pattern) -> str | None:
    """``"copy"`` if ``G`` is isomorphic to ``F``, ``"c6"`` for (C6, P3), else None."""
    if F.is_p3 and is_cycle6(G):
        return "c6"
    if G.n == F.ell and G.m == F.k and is_isomorphic(G, F.f):
        return "copy"
    return None


def check_witness(G: Graph, F: Pattern, w: CopyWitness) -> bool:
    """Independent check of the witness invariants."""
    phi = w.mapping
    if len(phi) != F.ell or len(set(phi)) != F.ell:
        return False
    if not all(0 <= x < G.n for x in phi):
        return False
    if any(not G.has_edge(phi[a], phi[b]) for a, b in F.f.edges()):
        return False
    return w.center in phi and all(x == w.center or G.has_edge(w.center, x) for x in phi)


# --- built-in library ---------------------------------------------------------

_PAW = make_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])

_BUILTIN_GRAPHS = {
    "k1": ("K1", complete_graph(1)),
    "k2": ("K2", complete_graph(2)),
    "p3": ("P3", path_graph(3)),
    "k3": ("K3", complete_graph(3)),
    "k13": ("K13", star_graph(3)),
    "paw": ("PAW", _PAW),
    "k4": ("K4", complete_graph(4)),
    "k14": ("K14", star_graph(4)),
}

BUILTIN_NAMES = tuple(_BUILTIN_GRAPHS)


def builtin_pattern(name: str) -> Pattern:
    key = name.lower()
    if key not in _BUILTIN_GRAPHS:
        raise GraphValidationError(f"unknown pattern {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
    label, f = _BUILTIN_GRAPHS[key]
    return make_pattern(f, name=label)


def builtin_patterns() -> list[Pattern]:
    return [builtin_pattern(name) for name in BUILTIN_NAMES]
