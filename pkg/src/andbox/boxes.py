"""Corner-box and semi-square intersection models.

A d-dimensional box-and-point realization with positive coordinates maps
to a product of planar boxes [p_i, R_i] x [-p_i, -L_i], one planar factor
per source dimension, whose lower-left corner (p_i, -p_i) sits on the
diagonal x + y = 0.  Two such products intersect iff the source vertices
are mutually contained, so the intersection graph of the corner boxes is
exactly the induced graph.  For central one-dimensional realizations the
lower-left triangular halves (isosceles semi-squares) already carry the
same intersection graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph
from .realization import Realization, RealizationError, is_central, transform


@dataclass(frozen=True)
class CornerBox:
    """One planar factor ((x_lo, x_hi), (y_lo, y_hi)) per source dimension;
    the overall region is the Cartesian product of the factors."""

    vertex: int
    factors: tuple

    @property
    def d(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class CornerBoxModel:
    """Corner boxes plus the translation that was applied to make all
    source coordinates positive (0 when none was needed); the inverse
    transform subtracts it again."""

    boxes: tuple
    offset: Fraction

    def __iter__(self):
        return iter(self.boxes)

    def __len__(self):
        return len(self.boxes)


def _positivity_offset(r: Realization) -> Fraction:
    low = min(lo for box in r.boxes for (lo, hi) in box)
    return Fraction(1) - low if low <= 0 else Fraction(0)


def to_corner_boxes(r: Realization) -> CornerBoxModel:
    """Corner boxes of a realization, one per vertex.

    Coordinates are first translated (uniformly, every dimension) so every
    box endpoint is positive; the shift is recorded on the model.
    """
    offset = _positivity_offset(r)
    shifted = transform(r, offset, 1) if offset else r
    boxes = []
    for v, box, point in shifted.items():
        factors = tuple(
            ((p, hi), (-p, -lo)) for (lo, hi), p in zip(box, point)
        )
        boxes.append(CornerBox(v, factors))
    return CornerBoxModel(tuple(boxes), offset)


def check_corner_box(cb: CornerBox) -> None:
    for (x_lo, x_hi), (y_lo, y_hi) in cb.factors:
        if x_lo > x_hi or y_lo > y_hi:
            raise RealizationError(f"vertex {cb.vertex}: empty planar factor")
        if x_lo + y_lo != 0:
            raise RealizationError(
                f"vertex {cb.vertex}: corner ({x_lo},{y_lo}) off the diagonal"
            )


def _boxes_arg(boxes):
    bs = tuple(boxes)
    if not bs:
        raise RealizationError("no corner boxes given")
    d = bs[0].d
    if any(cb.d != d for cb in bs):
        raise RealizationError("corner boxes disagree on dimension")
    return bs


def corner_box_intersection_graph(boxes) -> Graph:
    """Closed-intersection graph of corner boxes; ids must be 1..n."""
    bs = _boxes_arg(boxes)
    ids = sorted(cb.vertex for cb in bs)
    if ids != list(range(1, len(bs) + 1)):
        raise RealizationError("corner box ids must be 1..n")
    edges = []
    for a, b in itertools.combinations(bs, 2):
        hit = True
        for fa, fb in zip(a.factors, b.factors):
            for (alo, ahi), (blo, bhi) in zip(fa, fb):
                if max(alo, blo) > min(ahi, bhi):
                    hit = False
                    break
            if not hit:
                break
        if hit:
            edges.append(tuple(sorted((a.vertex, b.vertex))))
    return Graph.from_edges(len(bs), sorted(edges))


def corner_boxes_to_realization(boxes) -> Realization:
    """Inverse transform: p from the corner, R from the x-extent, L from
    the negated y-extent.  When given a CornerBoxModel, the recorded
    positivity shift is undone, so the round trip is the identity."""
    offset = boxes.offset if isinstance(boxes, CornerBoxModel) else Fraction(0)
    bs = _boxes_arg(boxes)
    items = {}
    for cb in bs:
        check_corner_box(cb)
        box = tuple((-y_hi, x_hi) for (x_lo, x_hi), (y_lo, y_hi) in cb.factors)
        point = tuple(x_lo for (x_lo, x_hi), _ in cb.factors)
        items[cb.vertex] = (box, point)
    r = Realization.build(bs[0].d, items)
    return transform(r, -offset, 1) if offset else r


@dataclass(frozen=True)
class SemiSquare:
    """Lower-left triangular half of a planar corner box with equal legs:
    vertices (corner, -corner), (corner+leg, -corner), (corner, -corner+leg).
    """

    vertex: int
    corner: Fraction
    leg: Fraction

    def triangle(self):
        p, r = self.corner, self.leg
        return ((p, -p), (p + r, -p), (p, -p + r))


def to_semisquares(r: Realization):
    """Semi-squares of a central one-dimensional realization (coordinates
    are shifted to be positive first, which translates the whole picture
    along the diagonal and changes no intersections)."""
    if r.d != 1:
        raise RealizationError("semi-squares are defined for d = 1")
    if not is_central(r):
        raise RealizationError("semi-squares require a central realization")
    offset = _positivity_offset(r)
    shifted = transform(r, offset, 1) if offset else r
    out = []
    for v, box, point in shifted.items():
        (lo, hi) = box[0]
        p = point[0]
        out.append(SemiSquare(v, p, hi - p))
    return tuple(out)


_AXES = ((1, 0), (0, 1), (1, 1))


def _triangles_intersect(ta, tb) -> bool:
    # closed convex polygons intersect iff no edge normal separates them;
    # both triangles have edges along the axes and the antidiagonal
    for ax, ay in _AXES:
        pa = [ax * x + ay * y for x, y in ta]
        pb = [ax * x + ay * y for x, y in tb]
        if max(min(pa), min(pb)) > min(max(pa), max(pb)):
            return False
    return True


def semisquare_intersection_graph(squares) -> Graph:
    """Closed-intersection graph of semi-squares; ids must be 1..n."""
    ts = tuple(squares)
    if not ts:
        raise RealizationError("no semi-squares given")
    ids = sorted(t.vertex for t in ts)
    if ids != list(range(1, len(ts) + 1)):
        raise RealizationError("semi-square ids must be 1..n")
    edges = []
    for a, b in itertools.combinations(ts, 2):
        if _triangles_intersect(a.triangle(), b.triangle()):
            edges.append(tuple(sorted((a.vertex, b.vertex))))
    return Graph.from_edges(len(ts), sorted(edges))
