"""Exact isolation numbers by subset enumeration in increasing size."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exceptions import UnsupportedError
from .graph import Graph, check_vertex_set, closed_neighborhood_mask, iter_bits, to_mask
from .patterns import Pattern, builtin_pattern, find_copy, find_copy_centers

EXACT_LIMIT = 24


@dataclass(frozen=True)
class ExactResult:
    iota: int
    witness: frozenset[int]
    explored: int


def _isolates(G: Graph, F: Pattern, dmask: int) -> bool:
    rest = G.full_mask & ~closed_neighborhood_mask(G, dmask)
    return find_copy(G, F, rest) is None


def is_isolating(G: Graph, F: Pattern, D) -> bool:
    """True iff ``G - N[D]`` contains no F-copy."""
    return _isolates(G, F, to_mask(check_vertex_set(G, D)))


def iota_exact(G: Graph, F: Pattern) -> ExactResult:
    """Smallest F-isolating set of ``G``.

    Candidates are restricted to vertices within distance one of some copy:
    a vertex whose closed neighbourhood misses every copy never helps.  The
    witness is the first minimum set in lexicographic order over the
    candidates.

    Raises:
        UnsupportedError: above :data:`EXACT_LIMIT` vertices.
    """
    if G.n > EXACT_LIMIT:
        raise UnsupportedError(f"exact solver is limited to {EXACT_LIMIT} vertices, got {G.n}")
    explored = 1
    if find_copy(G, F) is None:
        return ExactResult(0, frozenset(), explored)
    centers = to_mask(find_copy_centers(G, F))
    # every copy lies in N[center], so candidates lie in N[N[U]]
    cand = sorted(iter_bits(closed_neighborhood_mask(G, closed_neighborhood_mask(G, centers))))
    for size in range(1, len(cand) + 1):
        for D in combinations(cand, size):
            explored += 1
            if _isolates(G, F, to_mask(D)):
                return ExactResult(size, frozenset(D), explored)
    raise AssertionError("the full candidate set always isolates")  # pragma: no cover


def gamma(G: Graph) -> int:
    """Domination number, by its own brute force over bitmask subsets."""
    if G.n > EXACT_LIMIT:
        raise UnsupportedError(f"exact solver is limited to {EXACT_LIMIT} vertices, got {G.n}")
    full = G.full_mask
    closed = [G.adj[v] | 1 << v for v in range(G.n)]
    for size in range(G.n + 1):
        for D in combinations(range(G.n), size):
            cover = 0
            for v in D:
                cover |= closed[v]
            if cover == full:
                return size
    return G.n  # pragma: no cover


def iota_k1(G: Graph) -> ExactResult:
    return iota_exact(G, builtin_pattern("k1"))
