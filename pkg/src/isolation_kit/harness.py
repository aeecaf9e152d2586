"""Corpus generation and theorem verification at desk scale.

Rows are independent tasks; they may be computed by a process pool but are
always reported in corpus order, so reports are byte-identical across runs
and worker counts.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import random
from collections import Counter
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from .exact import EXACT_LIMIT, iota_exact
from .exceptions import GraphValidationError, ProofInvariantViolated, UnsupportedError
from .graph import (
    CANONICAL_LIMIT,
    Graph,
    canonical_form,
    canonicalize,
    component_masks,
    induced_subgraph,
    make_graph,
)
from .patterns import Pattern, special_kind
from .proof import _special_cover, bound, isolate

log = logging.getLogger(__name__)

ENUMERATION_LIMIT = 8
WORKERS_ENV = "ISOLATION_KIT_WORKERS"


@dataclass
class Corpus:
    """A named sequence of graphs.

    ``source`` describes where the graphs came from, e.g.
    ``{"kind": "exhaustive", "n": 6}``.
    """

    source: dict
    graphs: list[Graph]

    def __iter__(self):
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)


# --- enumeration ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (make_graph(1, []),)
    # every connected graph has a vertex whose removal keeps it connected
    # (a leaf of a spanning tree), so all classes arise by adding one vertex
    # to a smaller connected class.
    seen: dict[bytes, Graph] = {}
    for base in _connected_classes(n - 1):
        for nbrs in range(1, 1 << (n - 1)):
            adj = list(base.adj)
            for u in range(n - 1):
                if nbrs >> u & 1:
                    adj[u] |= 1 << (n - 1)
            adj.append(nbrs)
            g = Graph(n, tuple(adj))
            key = canonical_form(g)
            if key not in seen:
                seen[key] = g
    return tuple(canonicalize(seen[key]) for key in sorted(seen))


def enumerate_connected(n: int) -> Corpus:
    """One representative per isomorphism class of connected ``n``-vertex graphs.

    Representatives are in canonical labeling and sorted by canonical form.

    Raises:
        UnsupportedError: if ``n`` exceeds :data:`ENUMERATION_LIMIT`.
    """
    if n > ENUMERATION_LIMIT:
        raise UnsupportedError(f"exhaustive enumeration is limited to n <= {ENUMERATION_LIMIT}")
    graphs = list(_connected_classes(n)) if n >= 1 else []
    return Corpus({"kind": "exhaustive", "n": n}, graphs)


def enumerate_connected_upto(n: int) -> Corpus:
    graphs = []
    for size in range(1, n + 1):
        graphs.extend(enumerate_connected(size).graphs)
    return Corpus({"kind": "exhaustive", "n": n, "cumulative": True}, graphs)


def random_connected(n: int, m: int, seed: int) -> Graph:
    """Random spanning tree (from a Prüfer sequence) plus random extra edges.

    Deterministic for a given ``seed``; not uniform over isomorphism classes.

    Raises:
        GraphValidationError: if no connected simple graph has ``n`` vertices
            and ``m`` edges.
    """
    if n < 1 or not (n - 1 <= m <= n * (n - 1) // 2):
        raise GraphValidationError(f"no connected simple graph with n={n}, m={m}")
    rng = random.Random(seed)
    edges = set(_prufer_tree(n, rng))
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    edges.update(rng.sample(missing, m - (n - 1)))
    return make_graph(n, sorted(edges))


def _prufer_tree(n: int, rng: random.Random) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    edges = []
    for a in seq:
        leaf = next(u for u in range(n) if degree[u] == 1)
        edges.append((min(a, leaf), max(a, leaf)))
        degree[leaf] -= 1
        degree[a] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return edges


def random_corpus(n: int, m: int, count: int, seed: int) -> Corpus:
    rng = random.Random(seed)
    graphs = [random_connected(n, m, rng.randrange(2**32)) for _ in range(count)]
    return Corpus({"kind": "random", "n": n, "m": m, "count": count, "seed": seed}, graphs)


# --- verification ---------------------------------------------------------------


@dataclass
class Row:
    graph_id: int
    canonical: str
    n: int
    m: int
    pattern: str
    special: bool
    iota_exact: int | None
    proof_size: int
    bound: int
    method: str
    cases: str
    ok: bool
    error: str = ""


@dataclass
class VerificationReport:
    rows: list[Row] = field(default_factory=list)

    @property
    def violations(self) -> int:
        return sum(not r.ok for r in self.rows)

    @property
    def equality_count(self) -> int:
        return sum(1 for r in self.rows if not r.special and r.proof_size == r.bound)

    def case_histogram(self) -> dict[str, int]:
        hist: Counter[str] = Counter()
        for r in self.rows:
            for tag in r.cases.split(";") if r.cases else ():
                hist[tag] += 1
        return dict(sorted(hist.items()))

    def summary(self) -> dict:
        return {
            "rows": len(self.rows),
            "violations": self.violations,
            "equality_count": self.equality_count,
            "special_rows": sum(r.special for r in self.rows),
            "case_histogram": self.case_histogram(),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        names = list(Row.__dataclass_fields__)
        writer = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
        writer.writeheader()
        for r in self.rows:
            d = asdict(r)
            d["iota_exact"] = "" if r.iota_exact is None else r.iota_exact
            writer.writerow(d)
        return buf.getvalue()

    def summary_json(self) -> str:
        return json.dumps(self.summary(), indent=2, sort_keys=True) + "\n"


def _canonical_hex(G: Graph) -> str:
    if G.n > CANONICAL_LIMIT:
        return ""
    return canonical_form(G).hex()


def verify_graph(graph_id: int, G: Graph, F: Pattern, use_exact: bool, fail_fast: bool) -> Row:
    """Verify one ``(G, F)`` pair and return its report row."""
    k = F.k
    b = bound(G.m, k)
    kind = special_kind(G, F) if G.is_connected() else None
    exact = None
    if use_exact and G.n <= EXACT_LIMIT:
        exact = iota_exact(G, F).iota
    error = ""
    cases = ""
    if kind is not None:
        size = _special_cover(G, G.full_mask, kind).bit_count()
        method = "special"
        ok = True
    elif k <= 1:
        size = exact if exact is not None else iota_exact(G, F).iota
        method = "oracle"
        ok = size <= b or not G.is_connected()
    else:
        method = "proof"
        try:
            cert = isolate(G, F)
        except ProofInvariantViolated as exc:
            if fail_fast:
                raise
            log.warning("proof invariant violated on graph %d (%s): %s", graph_id, F.name, exc)
            return Row(graph_id, _canonical_hex(G), G.n, G.m, F.name, False, exact, -1, b,
                       method, "", False, f"ProofInvariantViolated: {exc}")
        size = cert.size
        cases = ";".join(cert.case_tags())
        ok = cert.certified and (cert.within_bound or len(component_masks(G)) > 1)
    if exact is not None:
        ok = ok and exact <= size and (kind is not None or exact <= b or len(component_masks(G)) > 1)
    return Row(graph_id, _canonical_hex(G), G.n, G.m, F.name, kind is not None, exact, size, b,
               method, cases, ok, error)


def _task(args):
    return verify_graph(*args)


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise GraphValidationError(f"{WORKERS_ENV} must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def verify_corpus(
    corpus: Iterable[Graph],
    patterns: Sequence[Pattern],
    use_exact: bool = False,
    fail_fast: bool = False,
    workers: int | None = None,
) -> VerificationReport:
    """Check the bound for every (graph, pattern) pair.

    Rows are ordered graph-major, pattern-minor.  With ``fail_fast`` a
    :class:`ProofInvariantViolated` propagates with its trace; otherwise it is
    recorded as a failing row.
    """
    tasks = [(i, G, F, use_exact, fail_fast) for i, G in enumerate(corpus) for F in patterns]
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(tasks) < 64:
        rows = [_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_task, tasks, chunksize=max(1, len(tasks) // (workers * 8))))
    return VerificationReport(rows)


def find_extremal(F: Pattern, corpus: Iterable[Graph]) -> list[Graph]:
    """Graphs attaining ``iota = floor((m+1)/(k+2)) > 0``, in canonical labeling."""
    out = []
    for G in corpus:
        b = bound(G.m, F.k)
        if b == 0:
            continue
        if iota_exact(G, F).iota == b:
            out.append(canonicalize(G) if G.n <= CANONICAL_LIMIT else G)
    return out


def component_graphs(G: Graph) -> list[Graph]:
    return [induced_subgraph(G, c).graph for c in component_masks(G)]
