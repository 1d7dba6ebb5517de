"""Constructive central realizations and membership orderings.

Covers the families with known constructions: interval models (greedy
placement), cycles (closed form), gluing at safe vertices, block trees,
two cycles sharing an edge, outerplanar graphs (polygon dissections per
block), rooted-directed-path models (ordering), and the three-path H
family (orderings for the short-path cases).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .families import HGraphSpec, IntervalModel, OuterplanarModel, RootedPathModel
from .graphs import BlockDecomposition, Graph, GraphError, block_decomposition
from .orders import Ordering, rank_bounds
from .realization import Realization, is_safe

HALF = Fraction(1, 2)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# interval models -> central realization (greedy, one vertex per step)

@dataclass(frozen=True)
class GreedyState:
    """Snapshot after one greedy insertion.

    placed: ids in insertion order; points/radii: the partial central
    realization (box = [p - r, p + r]); rank/nbr_lo/nbr_hi: position and
    closed-neighborhood rank bounds in the insertion order; step scalars
    record how the newest vertex was placed.
    """

    placed: tuple
    points: dict
    radii: dict
    rank: dict
    nbr_lo: dict
    nbr_hi: dict
    blocker: object  # max right endpoint among placed non-neighbors (None if none)
    ceiling: object  # min right endpoint among placed neighbors
    inner_reach: object  # max right endpoint inside the kept set (None if empty)
    radius: object  # radius given to the newest vertex
    kept: tuple  # placed j whose boxes were not widened this step


def _endpoint_order(m: IntervalModel):
    keyed = sorted(
        range(1, m.n + 1), key=lambda v: (m.span(v)[0], m.span(v)[1], v)
    )
    return tuple(keyed)


def interval_greedy_steps(m: IntervalModel):
    """Yield a GreedyState after each insertion; the last one carries the
    finished realization.

    Vertices are processed by ascending left endpoint (ties: right
    endpoint, then id).  The new vertex i is placed strictly after the
    previous point and every placed non-neighbor's box, strictly before
    every placed neighbor's right end; its radius reaches back to its
    earliest-ranked neighbor and over the kept boxes, plus one; boxes of
    placed vertices whose closed neighborhoods extend to rank i or beyond
    are widened by that radius on both sides.
    """
    g = m.intersection_graph()
    if not g.is_connected():
        raise GraphError("interval model must have a connected graph")
    order = _endpoint_order(m)
    o = Ordering(order)
    nbr_lo, nbr_hi = rank_bounds(g, o)
    rank = o.ranks()

    placed = []
    points = {}
    radii = {}

    for i, u in enumerate(order, start=1):
        if i == 1:
            points[u] = Fraction(0)
            radii[u] = Fraction(1)
            placed.append(u)
            yield GreedyState(
                tuple(placed), dict(points), dict(radii), rank, nbr_lo,
                nbr_hi, None, None, None, Fraction(1), (u,),
            )
            continue

        nbrs = set(g.neighbors(u))
        blocker = None
        ceiling = None
        for j in placed:
            rj = points[j] + radii[j]
            if j in nbrs:
                if ceiling is None or rj < ceiling:
                    ceiling = rj
            elif blocker is None or rj > blocker:
                blocker = rj
        if ceiling is None:
            raise GraphError(
                "interval model must have a connected graph"
            )  # cannot happen after the connectivity check
        prev = points[placed[-1]]
        floor = prev if blocker is None else max(prev, blocker)
        p = (floor + ceiling) / 2

        kept = [j for j in placed if nbr_hi[j] < nbr_hi[u]]
        inner_reach = None
        for j in kept:
            rj = points[j] + radii[j]
            if inner_reach is None or rj > inner_reach:
                inner_reach = rj
        anchor = order[nbr_lo[u] - 1]  # earliest-ranked closed neighbor
        radius = p - points[anchor]
        if inner_reach is not None and inner_reach - p > radius:
            radius = inner_reach - p
        radius += 1

        points[u] = p
        radii[u] = radius
        for j in placed:
            if j not in kept:
                radii[j] += radius
        placed.append(u)
        yield GreedyState(
            tuple(placed), dict(points), dict(radii), rank, nbr_lo, nbr_hi,
            blocker, ceiling, inner_reach, radius, tuple(kept),
        )


def interval_to_cand1(m: IntervalModel) -> Realization:
    """Central realization inducing the interval model's graph."""
    if m.n == 0:
        raise GraphError("interval model must have at least one vertex")
    state = None
    for state in interval_greedy_steps(m):
        pass
    items = {
        v: ((state.points[v] - state.radii[v], state.points[v] + state.radii[v]),
            state.points[v])
        for v in state.placed
    }
    return Realization.build(1, items)


# ---------------------------------------------------------------------------
# cycles

def cycle_cand1(n: int, eps=HALF, anchor: int = 1) -> Realization:
    """Central realization of the n-cycle 1-2-...-n-1.

    Along the cycle starting at the anchor, the first and last vertices
    get wide boxes reaching across everything ([2-n-e, n+e] around point 1
    and [1-e, 2n-1+e] around point n); every other vertex i gets
    [i-(1+e), i+(1+e)] around point i.  The anchor's point lies only in
    its own and its two cycle neighbors' boxes, so the anchor is safe.
    """
    eps = _frac(eps)
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    if not (0 < eps < 1):
        raise GraphError("eps must lie strictly between 0 and 1")
    if not (1 <= anchor <= n):
        raise GraphError("anchor must be a vertex of the cycle")
    items = {}
    for label in range(1, n + 1):
        v = (label - 1 + anchor - 1) % n + 1
        if label == 1:
            box = (2 - n - eps, n + eps)
        elif label == n:
            box = (1 - eps, 2 * n - 1 + eps)
        else:
            box = (label - (1 + eps), label + (1 + eps))
        items[v] = (tuple(_frac(c) for c in box), Fraction(label))
    return Realization.build(1, items)


# ---------------------------------------------------------------------------
# gluing two realizations at a safe vertex

@dataclass(frozen=True)
class GlueParams:
    """delta: distance from the hosting point to the nearest other point
    of the host; span: length of an interval containing every guest box;
    scale: delta / (2 * span)."""

    delta: Fraction
    span: Fraction
    scale: Fraction


def glue_params(r1: Realization, w1: int, r2: Realization) -> GlueParams:
    p1 = r1.coordinate(w1)
    deltas = [abs(p1 - pt[0]) for v, _, pt in r1.items() if v != w1]
    # distance to every other point, not just neighbors: a wide host box
    # of a non-neighbor may reach arbitrarily close to p1
    delta = min(deltas) if deltas else Fraction(1)
    coords = [c for _, box, _ in r2.items() for c in box[0]]
    span = max(coords) - min(coords)
    if span == 0:
        span = Fraction(1)
    return GlueParams(delta, span, delta / (2 * span))


def glue_at_safe_vertex(
    r1: Realization, w1: int, r2: Realization, w2: int
) -> Realization:
    """Identify w1 (in r1) with w2 (in r2, where w2 must be safe).

    The guest r2 is translated so p_{w2} sits at the origin, shrunk by
    delta/(2*span) so all of it fits strictly inside the point-free zone
    around p_{w1}, and translated onto p_{w1}.  The merged vertex keeps
    the hull of its two boxes.  Vertex ids must not collide outside the
    identified pair.
    """
    if r1.d != 1 or r2.d != 1:
        raise GraphError("gluing is defined for one-dimensional realizations")
    if not is_safe(r2, w2):
        raise GraphError(f"vertex {w2} is not safe in the second realization")
    for r in (r1, r2):
        pts = [pt[0] for _, _, pt in r.items()]
        if len(set(pts)) != len(pts):
            raise GraphError("gluing requires distinct points in each input")
    overlap = (set(r1.ids) - {w1}) & (set(r2.ids) - {w2})
    if overlap:
        raise GraphError(f"vertex ids collide outside the glued pair: {sorted(overlap)}")

    params = glue_params(r1, w1, r2)
    p1 = r1.coordinate(w1)
    p2 = r2.coordinate(w2)
    s = params.scale

    def shift(x):
        return s * (x - p2) + p1

    items = {}
    for v, box, pt in r1.items():
        items[v] = (box[0], pt[0])
    (l1, h1) = r1.interval(w1)
    (l2, h2) = r2.interval(w2)
    items[w1] = ((min(l1, shift(l2)), max(h1, shift(h2))), p1)
    for v, box, pt in r2.items():
        if v == w2:
            continue
        (lo, hi) = box[0]
        items[v] = ((shift(lo), shift(hi)), shift(pt[0]))
    return Realization.build(1, items)


# ---------------------------------------------------------------------------
# block trees

def clique_cand1(vertices) -> Realization:
    """Central clique realization over the given ids: the i-th vertex gets
    point i and box [i-k, i+k], so every point lies in every box and every
    vertex is safe."""
    vs = sorted(vertices)
    if not vs:
        raise GraphError("clique needs at least one vertex")
    k = len(vs)
    items = {
        v: ((Fraction(i - k), Fraction(i + k)), Fraction(i))
        for i, v in enumerate(vs, start=1)
    }
    return Realization.build(1, items)


def assemble_block_tree(components, bd: BlockDecomposition) -> Realization:
    """Glue per-block realizations into one, walking the block tree
    breadth-first from the first block.

    components: either a dict {block index -> Realization} or a callable
    (block_index, parent_cut_vertex_or_None) -> Realization, called once
    per block when it is about to be glued.  Every non-root block's
    realization must have the parent cut vertex safe.
    """
    if callable(components):
        build = components
    else:
        build = lambda bi, cut: components[bi]

    blocks = bd.blocks
    if not blocks:
        raise GraphError("no blocks to assemble")
    acc = build(0, None)
    seen_blocks = {0}
    queue = deque([0])
    while queue:
        bi = queue.popleft()
        cuts = sorted(set(blocks[bi]) & bd.cut_vertices)
        for c in cuts:
            for bj, blk in enumerate(blocks):
                if bj in seen_blocks or c not in blk:
                    continue
                seen_blocks.add(bj)
                acc = glue_at_safe_vertex(acc, c, build(bj, c), c)
                queue.append(bj)
    if len(seen_blocks) != len(blocks):
        raise GraphError("block tree is not connected")
    return acc


def block_graph_cand1(g: Graph) -> Realization:
    """Central realization of a connected graph whose blocks are cliques."""
    bd = block_decomposition(g)
    for blk in bd.blocks:
        for u, v in itertools.combinations(sorted(blk), 2):
            if not g.has_edge(u, v):
                raise GraphError("every block must induce a clique")
    return assemble_block_tree(
        lambda bi, cut: clique_cand1(bd.blocks[bi]), bd
    )


# ---------------------------------------------------------------------------
# cycles sharing an edge, and polygon dissections

def _insert_cycle_into_gap(items: dict, x: int, y: int, new_ids):
    """Insert the internals of a cycle of size len(new_ids)+2 between the
    points of x and y, which must be adjacent, consecutive in point order,
    and have boxes covering the whole [p_x, p_y] stretch.  new_ids lists
    the fresh vertices from the x side to the y side.  Mutates items.
    """
    (px, py) = items[x][1], items[y][1]
    if px > py:
        x, y, px, py = y, x, py, px
        new_ids = list(reversed(new_ids))
    gap = py - px
    if gap <= 0:
        raise GraphError("gap endpoints must have distinct points")
    pts = [pt for v, (_, pt) in items.items()]
    if any(px < q < py for q in pts):
        raise GraphError("gap must contain no other representative point")
    for end in (x, y):
        lo, hi = items[end][0]
        if not (lo <= px and py <= hi):
            raise GraphError("gap endpoint boxes must cover the whole gap")

    t = len(new_ids) + 2
    sigma = gap / (t - 1)
    eps = HALF
    left = [px - q for q in pts if q < px]
    right = [q - py for q in pts if q > py]
    if left:
        eps = min(eps, (t - 1) * min(left) / (2 * gap))
    if right:
        eps = min(eps, (t - 1) * min(right) / (2 * gap))

    guest = cycle_cand1(t, eps)
    for label, v in enumerate(new_ids, start=2):
        (lo, hi), pt = guest.box(label)[0], guest.coordinate(label)
        items[v] = (
            (sigma * (lo - 1) + px, sigma * (hi - 1) + px),
            sigma * (pt - 1) + px,
        )


def glue_cycles_on_edge(n: int, m: int, shared=(1, 2), eps=HALF) -> Realization:
    """Central realization of an n-cycle and an m-cycle identified along
    one edge of the m-cycle 1-2-...-m-1 (the `shared` pair, which must be
    consecutive on that cycle).  The n-cycle contributes fresh vertices
    m+1 .. m+n-2 forming a path between the shared endpoints.

    The m-cycle is realized so the shared endpoints take consecutive
    points; the n-cycle's realization is built with those endpoints as its
    two wide extremes, squeezed into the unit gap between them, and its
    extreme pair dropped in favor of the originals.
    """
    if n < 3 or m < 3:
        raise GraphError("both cycles need at least 3 vertices")
    u, v = shared
    if not (1 <= u <= m and 1 <= v <= m):
        raise GraphError("shared edge must use vertices of the second cycle")
    if (v - u) % m == m - 1:
        u, v = v, u
    if (v - u) % m != 1:
        raise GraphError("shared pair must be consecutive on the cycle")

    # label the m-cycle so u,v take labels (i, i+1): internal where possible
    i = 2 if m >= 4 else 1
    anchor = (u - i) % m + 1
    host = cycle_cand1(m, eps, anchor=anchor)
    items = {w: (box[0], pt[0]) for w, box, pt in host.items()}
    _insert_cycle_into_gap(items, u, v, list(range(m + 1, m + n - 1)))
    return Realization.build(1, items)


def _noncrossing(chords) -> bool:
    for (a, b), (c, d) in itertools.combinations(chords, 2):
        if a < c < b < d or c < a < d < b:
            return False
    return True


def _dissection_faces(k: int, chords):
    """Faces of a convex polygon (positions 0..k-1) dissected by
    non-crossing chords.  Returns (face, closing) pairs in discovery
    order: the first face closes on the wrap side (k-1, 0) and has
    closing None; every other face closes on one chord, listed as its
    first and last entries.  Faces are ascending position sequences."""
    reach = {}
    for a, b in chords:
        reach.setdefault(a, []).append(b)
    out = []

    def rec(a, b, closing):
        face = [a]
        c = a
        while c != b:
            q = c + 1
            for t in reach.get(c, ()):
                if t > q and t <= b and not (c == a and t == b):
                    q = t
            face.append(q)
            c = q
        out.append((face, closing))
        for s, t in zip(face, face[1:]):
            if t > s + 1:
                rec(s, t, (s, t))

    rec(0, k - 1, None)
    return out


def _realize_dissection_block(
    cycle_vs, chords, anchor: int, anchor_mate: int
) -> dict:
    """Realize one 2-connected outerplanar block given its outer cycle
    order (vertex ids) and chord edges.  The block is rotated so the
    outer edge (anchor, anchor_mate) becomes the wrap side; the face
    along it is realized first and the others are folded into the gaps
    of their closing chords.  Returns {vertex: (interval, point)}; the
    anchor ends up safe."""
    k = len(cycle_vs)
    idx = cycle_vs.index(anchor)
    before = cycle_vs[(idx - 1) % k]
    after = cycle_vs[(idx + 1) % k]
    if before == anchor_mate:
        ring = cycle_vs[idx:] + cycle_vs[:idx]
    elif after == anchor_mate:
        rolled = cycle_vs[idx + 1 :] + cycle_vs[: idx + 1]
        ring = tuple(reversed(rolled))
    else:
        raise GraphError("anchor edge must lie on the outer cycle")

    pos = {v: i for i, v in enumerate(ring)}
    chord_pos = []
    for a, b in chords:
        if a not in pos or b not in pos:
            raise GraphError("chord endpoints must lie on the outer cycle")
        pa, pb = sorted((pos[a], pos[b]))
        if pb - pa < 2 or (pa == 0 and pb == k - 1):
            raise GraphError("chords must skip at least one outer vertex")
        chord_pos.append((pa, pb))
    chord_pos = sorted(set(chord_pos))
    if len(chord_pos) != len(chords):
        raise GraphError("duplicate chords")
    if not _noncrossing(chord_pos):
        raise GraphError("chords must not cross")

    faces = _dissection_faces(k, chord_pos)
    root_face, _ = faces[0]
    items = {}
    root = cycle_cand1(len(root_face), HALF)
    for label, p in enumerate(root_face, start=1):
        v = ring[p]
        items[v] = (root.box(label)[0], root.coordinate(label))
    for face, closing in faces[1:]:
        a, b = closing
        internal = [ring[p] for p in face[1:-1]]
        _insert_cycle_into_gap(items, ring[a], ring[b], internal)
    return items


def outerplanar_cand1(m: OuterplanarModel) -> Realization:
    """Central realization of an outerplanar graph given its outer walk
    and chords.  Every 2-connected block is a polygon dissection realized
    face by face; blocks are then glued along the block tree, each block
    anchored so its parent cut vertex is safe."""
    g = m.graph()
    bd = block_decomposition(g)

    # cyclic outer order per block: first occurrences along the walk
    walk = m.outer
    block_ring = []
    for blk in bd.blocks:
        seen = []
        for v in walk:
            if v in blk and v not in seen:
                seen.append(v)
        block_ring.append(tuple(seen))

    edge_in_block = {}
    for bi, blk in enumerate(bd.blocks):
        for u, v in itertools.combinations(sorted(blk), 2):
            if g.has_edge(u, v):
                edge_in_block.setdefault((u, v), []).append(bi)

    def outer_edges(bi):
        ring = block_ring[bi]
        k = len(ring)
        out = []
        for i in range(k):
            u, v = ring[i], ring[(i + 1) % k]
            out.append((min(u, v), max(u, v)))
        return sorted(set(out))

    def build(bi, cut):
        blk = bd.blocks[bi]
        ring = block_ring[bi]
        if len(ring) != len(blk):
            raise GraphError("outer walk must visit every block vertex")
        if len(blk) == 1:
            only = next(iter(blk))
            return Realization.build(1, {only: ((-1, 1), 0)})
        if len(blk) == 2:
            return clique_cand1(blk)
        edges = outer_edges(bi)
        for u, v in edges:
            if not g.has_edge(u, v):
                raise GraphError("outer walk uses a missing edge")
        ring_edges = set(edges)
        chords = [
            (u, v)
            for (u, v), bis in edge_in_block.items()
            if bi in bis and (u, v) not in ring_edges
        ]
        if cut is None:
            a, b = edges[0]
            anchor, mate = a, b
        else:
            incident = [e for e in edges if cut in e]
            if not incident:
                raise GraphError("cut vertex must lie on the block's outer cycle")
            a, b = incident[0]
            anchor, mate = cut, (b if a == cut else a)
        items = _realize_dissection_block(ring, sorted(chords), anchor, mate)
        return Realization.build(1, items)

    return assemble_block_tree(build, bd)


# ---------------------------------------------------------------------------
# orderings for rooted-directed-path models and the H family

def rdp_ordering(m: RootedPathModel) -> Ordering:
    """Order graph vertices by the smallest reverse-preorder rank of their
    tree path, breaking ties by vertex id.

    The tree is walked depth-first (children ascending) and node ranks are
    the reverse of the visit order; since each path runs away from the
    root, its minimum rank sits at its bottom node, and orderings built
    this way always satisfy the four point condition.
    """
    m.validate()
    root = m.root()
    children = {u: [] for u in m.parent}
    for u, p in m.parent.items():
        if p != 0:
            children[p].append(u)
    for u in children:
        children[u].sort()
    visit = []
    stack = [root]
    while stack:
        u = stack.pop()
        visit.append(u)
        stack.extend(reversed(children[u]))
    total = len(visit)
    node_rank = {u: total - i for i, u in enumerate(visit)}
    verts = sorted(m.paths)
    verts.sort(key=lambda v: (min(node_rank[u] for u in m.paths[v]), v))
    return Ordering(tuple(verts))


def h_graph_ordering(spec: HGraphSpec) -> Ordering:
    """Membership ordering for the three-path graphs with shortest path
    of length 2 or 3 (the known positive cases)."""
    if spec.lx not in (2, 3):
        raise GraphError("only shortest path lengths 2 and 3 are supported")
    if not (spec.lx <= spec.ly <= spec.lz):
        raise GraphError("path lengths must be sorted ascending")
    a, b = spec.a, spec.b
    x, y, z = spec.x, spec.y, spec.z
    if spec.lx == 2:
        seq = (a,) + z + (b,) + x + tuple(reversed(y))
    else:
        seq = (y[0], x[0], a) + z + (b, x[1]) + tuple(reversed(y[1:]))
    return Ordering(seq)
