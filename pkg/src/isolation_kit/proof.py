"""Constructive isolating sets within ``floor((m+1)/(k+2))``.

:func:`isolate` runs an induction on the vertex count as a recursion.  At
each level it picks the copy center ``v`` of largest degree, splits
``G - N[v]`` into components, and dispatches on whether any component forms
a special pair with ``F``.  Sizes of recursively returned sets stand in for
isolation numbers in every size comparison; each level re-checks its own
bound and isolation before returning, so any gap surfaces as
:class:`ProofInvariantViolated` rather than a silently wrong answer.

Case tags recorded in the trace:

``NoCopy``, ``WholeNbhd``
    no copy at all / one vertex dominates ``G``.
``Case1-strict``, ``Case1.1``, ``Case1.2-Jempty``, ``Case1.2-Jspecial``
    no component of ``G - N[v]`` is special.
``Case2-C6``, ``Case2.1``, ``Case2.2.1``, ``Case2.2.2``
    some component is special.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .exact import _isolates
from .exceptions import PatternTooSmall, ProofInvariantViolated, SpecialPairInput
from .graph import (
    Graph,
    closed_neighborhood_mask,
    component_masks,
    induced_subgraph,
    is_cycle6,
    iter_bits,
)
from .patterns import Pattern, copy_centered_at, find_copy, find_copy_centers, special_kind

CASE_TAGS = (
    "NoCopy",
    "WholeNbhd",
    "Case1-strict",
    "Case1.1",
    "Case1.2-Jempty",
    "Case1.2-Jspecial",
    "Case2-C6",
    "Case2.1",
    "Case2.2.1",
    "Case2.2.2",
)


def bound(m: int, k: int) -> int:
    """``floor((m + 1) / (k + 2))``."""
    if k < 0 or m < 0:
        raise ValueError("edge counts must be non-negative")
    return (m + 1) // (k + 2)


@dataclass(frozen=True)
class CaseStep:
    """One recursion level.  Vertex ids in ``bindings`` refer to the input graph."""

    case_tag: str
    center: int | None
    depth: int
    bindings: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        return {"case": self.case_tag, "center": self.center, "depth": self.depth, "bindings": self.bindings}


@dataclass(frozen=True)
class ComponentInfo:
    vertices: frozenset[int]
    m: int
    bound: int
    special: str | None
    size: int


@dataclass
class Certificate:
    vertices: frozenset[int]
    bound: int
    trace: list[CaseStep]
    isolating: bool
    components: list[ComponentInfo] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def special_components(self) -> list[ComponentInfo]:
        return [c for c in self.components if c.special]

    @property
    def within_bound(self) -> bool:
        return self.size <= self.bound

    @property
    def certified(self) -> bool:
        """Isolating, and every non-special component stays within its own bound."""
        return self.isolating and all(c.size <= c.bound for c in self.components if not c.special)

    def case_tags(self) -> list[str]:
        return [s.case_tag for s in self.trace]

    def as_dict(self) -> dict[str, Any]:
        return {
            "set": sorted(self.vertices),
            "size": self.size,
            "bound": self.bound,
            "isolating": self.isolating,
            "certified": self.certified,
            "special_components": [
                {"vertices": sorted(c.vertices), "kind": c.special} for c in self.special_components
            ],
            "trace": [s.as_dict() for s in self.trace],
        }


def _antipode(G: Graph, within: int, z: int) -> int:
    """The vertex at distance 3 from ``z`` inside a 6-cycle ``G[within]``."""
    near = closed_neighborhood_mask(G, 1 << z) & within
    near = closed_neighborhood_mask(G, near) & within
    far = within & ~near
    if far.bit_count() != 1:
        raise ProofInvariantViolated("expected a 6-cycle when locating an antipode")
    return far.bit_length() - 1


def _dominating_vertex(G: Graph, within: int) -> int:
    for w in iter_bits(within):
        if (G.adj[w] | 1 << w) & within == within:
            return w
    raise ProofInvariantViolated("F-copy component has no dominating vertex")


class _Run:
    def __init__(self, F: Pattern):
        self.F = F
        self.k = F.k
        self.trace: list[CaseStep | None] = []
        # trace slot reserved by each active level, so steps read pre-order
        self._slots: list[int] = []

    def fail(self, message: str):
        raise ProofInvariantViolated(message, [s for s in self.trace if s is not None])

    def record(self, tag, labels, depth, center=None, **bindings):
        def lift(value):
            if isinstance(value, bool) or value is None:
                return value
            if isinstance(value, int):
                return labels[value]
            if isinstance(value, _Mask):
                return sorted(labels[b] for b in iter_bits(value.bits))
            if isinstance(value, (list, tuple)):
                return [lift(v) for v in value]
            return value

        self.trace[self._slots[-1]] = CaseStep(
            tag,
            None if center is None else labels[center],
            depth,
            {name: lift(value) for name, value in bindings.items()},
        )

    def choose_center(self, G: Graph, centers, depth: int) -> int:
        """Largest degree, then smallest id."""
        return max(centers, key=lambda u: (G.degree(u), -u))

    def sub(self, G: Graph, labels, depth: int, keep: int) -> int:
        """Solve ``G[keep]`` recursively; returns a mask of ``G`` vertices."""
        h = induced_subgraph(G, keep)
        dsub = self.solve(h.graph, tuple(labels[b] for b in h.back_map), depth + 1)
        out = 0
        for i in iter_bits(dsub):
            out |= 1 << h.back_map[i]
        return out

    def solve(self, G: Graph, labels, depth: int) -> int:
        if not G.is_connected():
            self.fail(f"recursive call at depth {depth} received a disconnected graph")
        if special_kind(G, self.F) is not None:
            self.fail(f"recursive call at depth {depth} received a special pair")
        self._slots.append(len(self.trace))
        self.trace.append(None)
        try:
            D = self._solve(G, labels, depth)
        finally:
            self._slots.pop()
        if D.bit_count() > bound(G.m, self.k):
            self.fail(
                f"set of size {D.bit_count()} exceeds bound {bound(G.m, self.k)} at depth {depth}"
            )
        if not _isolates(G, self.F, D):
            self.fail(f"set returned at depth {depth} is not isolating")
        return D

    def _solve(self, G: Graph, labels, depth: int) -> int:
        F, k = self.F, self.k
        if find_copy(G, F) is None:
            self.record("NoCopy", labels, depth)
            return 0
        v = self.choose_center(G, find_copy_centers(G, F), depth)
        f1 = copy_centered_at(G, F, v)
        nv = G.adj[v]
        closed_v = nv | 1 << v
        if closed_v == G.full_mask:
            self.record("WholeNbhd", labels, depth, v, v=v)
            return 1 << v

        comps = []
        for hmask in component_masks(G, G.full_mask & ~closed_v):
            h = induced_subgraph(G, hmask)
            x_h = next(x for x in iter_bits(nv) if G.adj[x] & hmask)
            y_h = (G.adj[x_h] & hmask & -(G.adj[x_h] & hmask)).bit_length() - 1
            linked = 0
            for x in iter_bits(nv):
                if G.adj[x] & hmask:
                    linked |= 1 << x
            comps.append(
                _Component(hmask, h.graph.m, special_kind(h.graph, F), x_h, y_h, linked)
            )
        state = _State(G, labels, depth, v, _Mask(to_bits(f1.mapping)), comps)
        if any(c.special for c in comps):
            return self._case2(state)
        return self._case1(state)

    # -- Case 1: no special component -----------------------------------------

    def _case1(self, s: _State) -> int:
        G, k, v = s.G, self.k, s.v
        sizes = {}
        D = 1 << v
        for c in s.comps:
            dh = self.sub(G, s.labels, s.depth, c.mask)
            sizes[c.mask] = dh.bit_count()
            D |= dh
        total = sum(c.m + 1 for c in s.comps)
        if G.m >= k + 1 + total:
            self.record("Case1-strict", s.labels, s.depth, v, v=v, F1=s.f1, H=[_Mask(c.mask) for c in s.comps])
            return D
        if G.m < k + total:
            self.fail("edge count below |E(F)| plus the component edges and links")
        for c in s.comps:
            if (k + 2) * sizes[c.mask] <= c.m:
                self.record("Case1.1", s.labels, s.depth, v, v=v, F1=s.f1, I=_Mask(c.mask))
                return D
        return self._case1_2(s)

    def _case1_2(self, s: _State) -> int:
        G, F, v = s.G, self.F, s.v
        inner = s.comps[0]
        x_i, y_i = inner.x, inner.y
        j_masks = component_masks(G, inner.mask & ~(1 << y_i))
        j_kinds = [special_kind(induced_subgraph(G, j).graph, F) for j in j_masks]

        if not any(j_kinds):
            self.record(
                "Case1.2-Jempty", s.labels, s.depth, v,
                v=v, F1=s.f1, I=_Mask(inner.mask), x_I=x_i, y_I=y_i,
                J=[_Mask(j) for j in j_masks],
            )
            D = 1 << x_i
            for piece in component_masks(G, G.full_mask & ~(1 << v | 1 << y_i)):
                if special_kind(induced_subgraph(G, piece).graph, F) is not None:
                    self.fail("a component of G - {v, y_I} is special")
                D |= self.sub(G, s.labels, s.depth, piece)
            return D

        gstar = G.full_mask & ~inner.mask
        if is_cycle6(induced_subgraph(G, gstar).graph):
            self.fail("G - V(I) is a 6-cycle")
        self.record(
            "Case1.2-Jspecial", s.labels, s.depth, v,
            v=v, F1=s.f1, I=_Mask(inner.mask), x_I=x_i, y_I=y_i, **{"G*": _Mask(gstar)},
            J=[_Mask(j) for j in j_masks],
            J_special=[_Mask(j) for j, kind in zip(j_masks, j_kinds) if kind],
        )
        D = 1 << y_i
        if len(s.comps) > 1:
            D |= self.sub(G, s.labels, s.depth, gstar)
        for j, kind in zip(j_masks, j_kinds):
            if kind == "copy":
                continue
            if kind == "c6":
                z = (G.adj[y_i] & j & -(G.adj[y_i] & j)).bit_length() - 1
                D |= 1 << _antipode(G, j, z)
            else:
                D |= self.sub(G, s.labels, s.depth, j)
        return D

    # -- Case 2: some component is special ------------------------------------

    def _case2(self, s: _State) -> int:
        G, F, v = s.G, self.F, s.v
        special = [c for c in s.comps if c.special]
        regular = [c for c in s.comps if not c.special]

        cycles = [c for c in special if c.special == "c6"]
        if cycles:
            h = cycles[0]
            y4 = _antipode(G, h.mask, h.y)
            removed = (G.adj[y4] & h.mask) | 1 << y4
            gstar = G.full_mask & ~removed
            if len(component_masks(G, gstar)) != 1:
                self.fail("G - N_H[y4] is disconnected")
            self.record(
                "Case2-C6", s.labels, s.depth, v,
                v=v, F1=s.f1, H=_Mask(h.mask), y1=h.y, y4=y4, **{"G*": _Mask(gstar)},
            )
            return 1 << y4 | self.sub(G, s.labels, s.depth, gstar)

        for x in iter_bits(G.adj[v]):
            linked_x = [c for c in special if c.linked >> x & 1]
            if len(linked_x) >= 2:
                others = [c.x for c in special if not c.linked >> x & 1]
                self.record(
                    "Case2.1", s.labels, s.depth, v,
                    v=v, F1=s.f1, x=x, H_x=[_Mask(c.mask) for c in linked_x], X=others,
                )
                D = 1 << v | 1 << x
                for xh in others:
                    D |= 1 << xh
                for c in regular:
                    D |= self.sub(G, s.labels, s.depth, c.mask)
                return D

        h = special[0]
        if h.linked == 1 << h.x:
            return self._case2_2_1(s, h)
        return self._case2_2_2(s, h)

    def _case2_2_1(self, s: _State, h: _Component) -> int:
        G, F, v, x = s.G, self.F, s.v, h.x
        removed = 1 << x | h.mask
        pieces = component_masks(G, G.full_mask & ~removed)
        gv = next(p for p in pieces if p >> v & 1)
        if (G.adj[v] | 1 << v) & ~(1 << x) & ~gv:
            self.fail("N[v] - x is not inside one component of G - X")
        regular = {c.mask: c for c in s.comps if not c.special}
        hstar = [p for p in pieces if p != gv]
        for p in hstar:
            c = regular.get(p)
            if c is None or c.linked != 1 << x:
                self.fail("a component of G - X other than G_v* is not a non-special H linked only to x")
        kind = special_kind(induced_subgraph(G, gv).graph, F)
        self.record(
            "Case2.2.1", s.labels, s.depth, v,
            v=v, F1=s.f1, H=_Mask(h.mask), x=x, y=h.y, X=_Mask(removed),
            **{"G_v*": _Mask(gv), "G_v*_special": kind, "H*_x": [_Mask(p) for p in hstar]},
        )
        D = 1 << x
        for p in hstar:
            D |= self.sub(G, s.labels, s.depth, p)
        if kind is None:
            D |= self.sub(G, s.labels, s.depth, gv)
        elif kind == "c6":
            D |= 1 << _antipode(G, gv, v)
        return D

    def _case2_2_2(self, s: _State, h: _Component) -> int:
        G, F, v = s.G, self.F, s.v
        x, y = h.x, h.y
        xp = next(u for u in iter_bits(h.linked) if u != x)
        yp = (G.adj[xp] & h.mask & -(G.adj[xp] & h.mask)).bit_length() - 1
        rest = G.full_mask & ~h.mask
        if len(component_masks(G, rest)) != 1:
            self.fail("G - V(H) is disconnected")
        w = _dominating_vertex(G, h.mask)
        kind = special_kind(induced_subgraph(G, rest).graph, F)
        base = dict(v=v, F1=s.f1, H=_Mask(h.mask), x=x, y=y, **{"x'": xp, "y'": yp}, w=w, I_special=kind)
        if kind is None:
            self.record("Case2.2.2", s.labels, s.depth, v, **base)
            return 1 << w | self.sub(G, s.labels, s.depth, rest)
        if kind == "c6":
            self.fail("G - V(H) is a 6-cycle")
        a_edges = [(u, t) for u in iter_bits(G.adj[v]) for t in iter_bits(G.adj[u] & h.mask)]
        a_count = len(a_edges)
        if a_count >= 3:
            self.record("Case2.2.2", s.labels, s.depth, v, A=a_edges, **base)
            return 1 << v | 1 << w
        if a_count != 2:
            self.fail("fewer than two edges between N(v) and H")
        if w in (y, yp):
            self.record("Case2.2.2", s.labels, s.depth, v, A=a_edges, **base)
            return 1 << w
        if (G.adj[y] & h.mask).bit_count() > (G.adj[yp] & h.mask).bit_count():
            x, y, xp, yp = xp, yp, x, y
        base.update({"x": x, "y": y, "x'": xp, "y'": yp})
        self.record("Case2.2.2", s.labels, s.depth, v, A=a_edges, **base)
        if find_copy(G, F, G.full_mask & ~closed_neighborhood_mask(G, 1 << xp)) is not None:
            self.fail("G - N[x'] still contains an F-copy")
        return 1 << xp


@dataclass(frozen=True)
class _Mask:
    bits: int


@dataclass(frozen=True)
class _Component:
    mask: int
    m: int
    special: str | None
    x: int
    y: int
    linked: int


@dataclass(frozen=True)
class _State:
    G: Graph
    labels: tuple[int, ...]
    depth: int
    v: int
    f1: _Mask
    comps: list[_Component]


def to_bits(vertices) -> int:
    out = 0
    for u in vertices:
        out |= 1 << u
    return out


def _special_cover(G: Graph, comp: int, kind: str) -> int:
    if kind == "copy":
        return 1 << _dominating_vertex(G, comp)
    z = (comp & -comp).bit_length() - 1
    return 1 << z | 1 << _antipode(G, comp, z)


def isolate(G: Graph, F: Pattern) -> Certificate:
    """F-isolating set of size at most ``floor((m+1)/(k+2))``.

    Disconnected graphs are handled component by component; components that
    form a special pair with ``F`` receive a direct optimal answer (one
    dominating vertex for an F-copy, two antipodal vertices for a 6-cycle) and
    are listed in ``Certificate.components``.

    Raises:
        PatternTooSmall: if ``F`` has fewer than two edges.
        SpecialPairInput: if ``G`` is connected and ``(G, F)`` is special.
        ProofInvariantViolated: if any level fails its own checks.
    """
    if F.k <= 1:
        raise PatternTooSmall(f"pattern {F.name} has {F.k} edges; use the exact solver for k <= 1")
    masks = component_masks(G)
    if len(masks) == 1:
        kind = special_kind(G, F)
        if kind is not None:
            gname = "C6" if kind == "c6" else f"{F.name}-copy"
            raise SpecialPairInput(f"special pair: F={F.name}, G={gname}")
    run = _Run(F)
    labels = tuple(range(G.n))
    D = 0
    infos = []
    for comp in masks:
        h = induced_subgraph(G, comp)
        kind = special_kind(h.graph, F)
        if kind is not None:
            part = _special_cover(G, comp, kind)
        elif len(masks) == 1:
            part = run.solve(G, labels, 0)
        else:
            part = run.sub(G, labels, -1, comp)
        D |= part
        infos.append(
            ComponentInfo(frozenset(h.back_map), h.graph.m, bound(h.graph.m, F.k), kind, part.bit_count())
        )
    return Certificate(
        vertices=frozenset(iter_bits(D)),
        bound=bound(G.m, F.k),
        trace=run.trace,
        isolating=_isolates(G, F, D),
        components=infos,
    )
