"""Box-and-representative-point realizations with exact rational coordinates.

A realization assigns every vertex a d-dimensional closed box (product of
closed intervals) plus a representative point inside it.  Two vertices are
adjacent in the induced graph iff each box contains the other vertex's
point.  "Central" means every point is exactly its box's center.

All adjacency decisions use Fraction arithmetic; no floats anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph


class RealizationError(ValueError):
    pass


class TiedPointsError(RealizationError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Realization:
    """dimension d; per vertex: box = tuple of (L, R) per dimension,
    point = tuple of rationals per dimension.  Vertex ids are positive
    integers, not necessarily contiguous (constructors relabel as needed)."""

    d: int
    ids: tuple  # sorted vertex ids
    boxes: tuple  # boxes[i][k] = (L, R) for ids[i], dimension k
    points: tuple  # points[i][k]

    @staticmethod
    def build(d: int, items: dict) -> "Realization":
        """items: id -> (box, point) with box a sequence of (L, R) pairs and
        point a sequence of coordinates; for d = 1 the box may be a bare
        (L, R) pair and the point a bare number."""
        if d < 1:
            raise RealizationError("dimension must be >= 1")
        ids = tuple(sorted(items))
        if any(not isinstance(v, int) or v < 1 for v in ids):
            raise RealizationError("vertex ids must be positive integers")
        boxes = []
        points = []
        for v in ids:
            box, point = items[v]
            if (
                d == 1
                and isinstance(box, (tuple, list))
                and box
                and not isinstance(box[0], (tuple, list))
            ):
                box = (box,)
            if d == 1 and not isinstance(point, (tuple, list)):
                point = (point,)
            if (
                not isinstance(box, (tuple, list))
                or not isinstance(point, (tuple, list))
                or len(box) != d
                or len(point) != d
                or any(
                    not isinstance(side, (tuple, list)) or len(side) != 2
                    for side in box
                )
            ):
                raise RealizationError(f"vertex {v}: wrong arity for d={d}")
            box = tuple((_frac(lo), _frac(hi)) for lo, hi in box)
            point = tuple(_frac(p) for p in point)
            for (lo, hi), p in zip(box, point):
                if not (lo <= p <= hi):
                    raise RealizationError(
                        f"vertex {v}: point {p} outside box [{lo},{hi}]"
                    )
            boxes.append(box)
            points.append(point)
        return Realization(d, ids, tuple(boxes), tuple(points))

    @property
    def n(self) -> int:
        return len(self.ids)

    def index(self, v: int) -> int:
        from bisect import bisect_left

        i = bisect_left(self.ids, v)
        if i == len(self.ids) or self.ids[i] != v:
            raise RealizationError(f"unknown vertex {v}")
        return i

    def box(self, v: int):
        return self.boxes[self.index(v)]

    def point(self, v: int):
        return self.points[self.index(v)]

    def interval(self, v: int):
        """d = 1 convenience: the (L, R) pair."""
        return self.box(v)[0]

    def coordinate(self, v: int) -> Fraction:
        """d = 1 convenience: the representative point."""
        return self.point(v)[0]

    def items(self):
        for i, v in enumerate(self.ids):
            yield v, self.boxes[i], self.points[i]


def _contains(box, point) -> bool:
    return all(lo <= p <= hi for (lo, hi), p in zip(box, point))


def adjacency_pairs(r: Realization):
    """Set of (u, v) pairs (u < v) adjacent by mutual containment.
    Works for any id set; induced_graph adds the 1..n contract."""
    out = set()
    for i, j in itertools.combinations(range(r.n), 2):
        if _contains(r.boxes[i], r.points[j]) and _contains(r.boxes[j], r.points[i]):
            out.add((r.ids[i], r.ids[j]))
    return out


def induced_graph(r: Realization) -> Graph:
    if r.ids != tuple(range(1, r.n + 1)):
        raise RealizationError("induced_graph expects vertex ids 1..n")
    return Graph.from_edges(r.n, sorted(adjacency_pairs(r)))


@dataclass(frozen=True)
class VerifyReport:
    missing_edges: tuple  # in graph, not induced
    extra_edges: tuple  # induced, not in graph

    @property
    def ok(self) -> bool:
        return not self.missing_edges and not self.extra_edges


def verify(r: Realization, g: Graph) -> VerifyReport:
    if set(r.ids) != set(g.vertices()):
        raise RealizationError("realization and graph vertex sets differ")
    induced = adjacency_pairs(r)
    target = {tuple(sorted(e)) for e in g.edge_list()}
    return VerifyReport(
        tuple(sorted(target - induced)), tuple(sorted(induced - target))
    )


def is_central(r: Realization) -> bool:
    for _, box, point in r.items():
        for (lo, hi), p in zip(box, point):
            if 2 * p != lo + hi:
                return False
    return True


def transform(r: Realization, delta, sigma) -> Realization:
    """x -> sigma*x + delta[k] per dimension; sigma > 0."""
    sigma = _frac(sigma)
    if sigma <= 0:
        raise RealizationError("scale factor must be positive")
    if not isinstance(delta, (tuple, list)):
        delta = (delta,) * r.d
    delta = tuple(_frac(x) for x in delta)
    if len(delta) != r.d:
        raise RealizationError("translation arity mismatch")
    boxes = tuple(
        tuple((sigma * lo + dk, sigma * hi + dk) for (lo, hi), dk in zip(box, delta))
        for box in r.boxes
    )
    points = tuple(
        tuple(sigma * p + dk for p, dk in zip(pt, delta)) for pt in r.points
    )
    return Realization(r.d, r.ids, boxes, points)


def r_order(r: Realization):
    """Vertex ids sorted by representative point (d = 1)."""
    if r.d != 1:
        raise RealizationError("r_order is defined for d = 1")
    pts = {}
    for v, _, point in r.items():
        p = point[0]
        if p in pts:
            raise TiedPointsError(
                f"vertices {pts[p]} and {v} share point {p}; "
                "apply make_points_distinct first"
            )
        pts[p] = v
    return tuple(v for _, v in sorted(pts.items()))


def make_points_distinct(r: Realization) -> Realization:
    """Separate tied representative points without changing the induced
    graph (d = 1).

    If points already differ the input is returned untouched.  Otherwise
    every box is first widened symmetrically by gap/4 (gap = smallest
    positive difference among all endpoint/point coordinates), which gives
    every edge's containments slack without creating containments, and then
    the k-th member of each tie group (ascending id) is shifted rigidly by
    k * gap / (8 * (n + 1)).  Widening is symmetric and shifts are rigid, so
    a central input stays central.
    """
    if r.d != 1:
        raise RealizationError("make_points_distinct is defined for d = 1")
    values = [p[0] for p in r.points]
    if len(set(values)) == len(values):
        return r

    coords = sorted(
        {c for box in r.boxes for c in box[0]} | {p[0] for p in r.points}
    )
    gap = None
    for a, b in zip(coords, coords[1:]):
        if b - a > 0 and (gap is None or b - a < gap):
            gap = b - a
    if gap is None:
        gap = Fraction(1)  # all coordinates equal; nothing to collide with

    widen = gap / 4
    step = gap / (8 * (r.n + 1))
    groups = {}
    for i, v in enumerate(r.ids):
        groups.setdefault(r.points[i][0], []).append(v)
    shift = {}
    for p in groups:
        members = sorted(groups[p])
        if len(members) == 1:
            shift[members[0]] = Fraction(0)
        else:
            for k, v in enumerate(members):
                shift[v] = k * step

    items = {}
    for v, box, point in r.items():
        (lo, hi) = box[0]
        s = shift[v]
        items[v] = ((lo - widen + s, hi + widen + s), point[0] + s)
    return Realization.build(1, items)


def is_safe(r: Realization, v: int) -> bool:
    """True iff p_v lies only in boxes of v itself and of v's neighbors in
    the induced graph (d = 1)."""
    if r.d != 1:
        raise RealizationError("is_safe is defined for d = 1")
    iv = r.index(v)
    pv = r.points[iv]
    adjacent = set()
    for (a, b) in adjacency_pairs(r):
        if a == v:
            adjacent.add(b)
        elif b == v:
            adjacent.add(a)
    for i, w in enumerate(r.ids):
        if w == v:
            continue
        if _contains(r.boxes[i], pv) and w not in adjacent:
            return False
    return True


def central_radius(r: Realization, v: int) -> Fraction:
    """Half-length of v's interval (d = 1)."""
    lo, hi = r.box(v)[0]
    return (hi - lo) / 2


def relabel(r: Realization, mapping: dict) -> Realization:
    """New realization with ids mapping[v]; mapping must be injective."""
    if len(set(mapping.values())) != len(mapping):
        raise RealizationError("relabel mapping must be injective")
    missing = [v for v in r.ids if v not in mapping]
    if missing:
        raise RealizationError(f"relabel mapping misses vertices {missing}")
    items = {mapping[v]: (box, point) for v, box, point in r.items()}
    if len(items) != r.n:
        raise RealizationError("relabel mapping must cover all vertices")
    return Realization.build(r.d, items)
