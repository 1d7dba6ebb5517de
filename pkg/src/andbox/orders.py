"""Vertex orderings, the four point condition, and ordering-based tools.

An ordering of G is 4PC-free when no ranks i < j < k < l carry edges
(i,k) and (j,l) while (j,k) is a non-edge.  A graph has a one-dimensional
box-and-point realization iff some ordering is 4PC-free; the realization
can then be read off the ordering with integer coordinates.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from . import kernels
from .graphs import Graph
from .realization import Realization

DEFAULT_NODE_BUDGET = 10**8


class OrderingError(ValueError):
    pass


@dataclass(frozen=True)
class Ordering:
    """order[i] is the vertex at rank i+1 (ranks run 1..n)."""

    order: tuple

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))

    @property
    def n(self) -> int:
        return len(self.order)

    def rank(self, v: int) -> int:
        try:
            return self.order.index(v) + 1
        except ValueError:
            raise OrderingError(f"vertex {v} not in ordering") from None

    def ranks(self) -> dict:
        return {v: i + 1 for i, v in enumerate(self.order)}

    def reversed(self) -> "Ordering":
        return Ordering(tuple(reversed(self.order)))

    def check_covers(self, g: Graph) -> None:
        if sorted(self.order) != list(g.vertices()):
            raise OrderingError("ordering does not cover the vertex set")


@dataclass(frozen=True)
class Violation:
    """Ranked quadruple x < u < v < y with edges xv, uy and non-edge uv."""

    x: int
    u: int
    v: int
    y: int


def rank_bounds(g: Graph, o: Ordering):
    """Per vertex, min and max rank over its closed neighborhood."""
    rank = o.ranks()
    lo = {}
    hi = {}
    for v in g.vertices():
        rs = [rank[v]] + [rank[u] for u in g.neighbors(v)]
        lo[v] = min(rs)
        hi[v] = max(rs)
    return lo, hi


def four_point_check(g: Graph, o: Ordering):
    """None when the ordering is 4PC-free, else the first violation.

    Quadratic pair scan: ranks j < k over a non-adjacent pair (u, v)
    violate iff some neighbor of v sits before rank j and some neighbor
    of u after rank k.  The reported quadruple is the one the exhaustive
    rank-lexicographic scan would find first.
    """
    o.check_covers(g)
    n = g.n
    rank = o.ranks()
    order = o.order
    lo, hi = rank_bounds(g, o)
    nbr_ranks = {
        v: sorted(rank[u] for u in g.neighbors(v)) for v in g.vertices()
    }
    best = None
    for j in range(2, n):  # rank of u
        u = order[j - 1]
        if hi[u] <= j:
            continue
        for k in range(j + 1, n):
            v = order[k - 1]
            if g.has_edge(u, v):
                continue
            if lo[v] < j and hi[u] > k:
                i = lo[v]
                rs = nbr_ranks[u]
                l = rs[bisect_right(rs, k)]
                cand = (i, j, k, l)
                if best is None or cand < best:
                    best = cand
    if best is None:
        return None
    i, j, k, l = best
    return Violation(order[i - 1], order[j - 1], order[k - 1], order[l - 1])


class FourPointViolationError(OrderingError):
    def __init__(self, violation: Violation):
        super().__init__(
            f"ordering violates the four point condition: {violation}"
        )
        self.violation = violation


def _require_pass(g: Graph, o: Ordering) -> None:
    violation = four_point_check(g, o)
    if violation is not None:
        raise FourPointViolationError(violation)


def realization_from_ordering(g: Graph, o: Ordering) -> Realization:
    """Integer realization read off a 4PC-free ordering: vertex v gets
    point rank(v) and box [min, max] of closed-neighborhood ranks."""
    _require_pass(g, o)
    rank = o.ranks()
    lo, hi = rank_bounds(g, o)
    return Realization.build(
        1, {v: ((lo[v], hi[v]), rank[v]) for v in g.vertices()}
    )


@dataclass(frozen=True)
class ImplicitCode:
    """Per-vertex rank triple: own rank pos inside reach interval
    [lo, hi].  Adjacency of a, b is decided by four integer comparisons."""

    lo: int
    hi: int
    pos: int


def implicit_encode(g: Graph, o: Ordering):
    """Codes listed by vertex id (entry i belongs to vertex i+1)."""
    _require_pass(g, o)
    rank = o.ranks()
    lo, hi = rank_bounds(g, o)
    return tuple(
        ImplicitCode(lo[v], hi[v], rank[v]) for v in g.vertices()
    )


def implicit_adjacent(a: ImplicitCode, b: ImplicitCode) -> bool:
    return b.lo <= a.pos <= b.hi and a.lo <= b.pos <= a.hi


@dataclass(frozen=True)
class RecognitionResult:
    status: str  # "found" | "not_member" | "exhausted"
    ordering: object  # Ordering when found, else None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == "found"


def _component_masks(sub: Graph):
    return [
        sum(1 << (u - 1) for u in sub.neighbors(v)) for v in sub.vertices()
    ]


def and1_recognize(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> RecognitionResult:
    """Backtracking search for a 4PC-free ordering.

    Deterministic: vertices are tried in ascending id, components in
    ascending order of their smallest vertex, and each {ordering,
    reversal} pair is explored once.  The budget counts processed
    placements across all components; hitting it yields "exhausted".
    Disconnected graphs are handled per component (components can be laid
    out on disjoint stretches of the line, so the graph qualifies iff
    every component does), concatenating the component orderings.
    """
    if budget < 0:
        raise OrderingError("budget must be nonnegative")
    merged = []
    nodes = 0
    for comp in g.connected_components():
        sub, back = g.subgraph(comp)
        status, order0, used = kernels.search_order(
            _component_masks(sub), budget - nodes
        )
        nodes += used
        if status == kernels.EXHAUSTED:
            return RecognitionResult("exhausted", None, nodes)
        if status == kernels.NOT_MEMBER:
            return RecognitionResult("not_member", None, nodes)
        merged.extend(back[i + 1] for i in order0)
    return RecognitionResult("found", Ordering(tuple(merged)), nodes)


@dataclass(frozen=True)
class CycleLabelReport:
    labeling: dict  # vertex -> 1..n along the cycle
    max_deviation: int
    extremes_adjacent: bool


def cycle_label_analysis(r: Realization) -> CycleLabelReport:
    """For a realization of a cycle with distinct points: walk the cycle
    from every start vertex in both directions (2n labelings), score each
    labeling by max |label - point rank|, and report a minimizer.

    Deterministic tie-break: starts in ascending vertex id, the two walk
    directions in ascending second-vertex id; first minimizer wins.
    """
    from .realization import induced_graph, r_order

    g = induced_graph(r)
    n = g.n
    if n < 3 or any(g.degree(v) != 2 for v in g.vertices()):
        raise OrderingError("realization does not induce a cycle")
    if not g.is_connected():
        raise OrderingError("realization does not induce a cycle")

    point_order = r_order(r)
    rank = {v: i + 1 for i, v in enumerate(point_order)}
    extremes_adjacent = g.has_edge(point_order[0], point_order[-1])

    def walk(start: int, second: int):
        seq = [start, second]
        while len(seq) < n:
            a, b = seq[-2], seq[-1]
            nxt = [w for w in g.neighbors(b) if w != a]
            seq.append(nxt[0])
        return seq

    best = None
    best_labeling = None
    for start in g.vertices():
        for second in g.neighbors(start):
            seq = walk(start, second)
            labeling = {v: i + 1 for i, v in enumerate(seq)}
            dev = max(abs(labeling[v] - rank[v]) for v in g.vertices())
            if best is None or dev < best:
                best = dev
                best_labeling = labeling
    return CycleLabelReport(best_labeling, best, extremes_adjacent)
