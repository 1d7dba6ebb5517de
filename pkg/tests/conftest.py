"""Shared fixtures and independent oracles.

Oracles here re-derive expected answers straight from the definitions
(mutual containment, center-distance adjacency, exhaustive quadruple
scans) so library results are checked against genuinely independent
computations, not against the code under test.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from andbox.graphs import Graph
from andbox.realization import Realization

F = Fraction


# ---------------------------------------------------------------------------
# primitive oracles


def point_in_box(point, box) -> bool:
    return all(lo <= x <= hi for (lo, hi), x in zip(box, point))


def oracle_induced_edges(r: Realization) -> set:
    """Edge set by direct mutual containment over all vertex pairs."""
    out = set()
    for (u, bu, pu), (v, bv, pv) in combinations(r.items(), 2):
        if point_in_box(pv, bu) and point_in_box(pu, bv):
            out.add(frozenset((u, v)))
    return out


def oracle_central_edges(r: Realization) -> set:
    """d = 1 center-distance adjacency: edge iff |p_u - p_v| <= min radius."""
    assert r.d == 1
    out = set()
    for (u, bu, pu), (v, bv, pv) in combinations(r.items(), 2):
        ru = (bu[0][1] - bu[0][0]) / 2
        rv = (bv[0][1] - bv[0][0]) / 2
        if abs(pu[0] - pv[0]) <= min(ru, rv):
            out.add(frozenset((u, v)))
    return out


def edge_set(g: Graph) -> set:
    return set(g.edges)


def naive_four_point_scan(g: Graph, order):
    """Exhaustive O(n^4) quadruple scan in rank-lexicographic order.

    Returns the first (x, u, v, y) with x < u < v < y by rank, edges xv
    and uy present, and uv absent; None when the ordering is clean.  This
    is the only implementation of the quadruple scan in the repository;
    the library's quadratic checker is tested against it.
    """
    n = len(order)
    adj = {v: frozenset(g.neighbors(v)) for v in g.vertices()}
    for i in range(n - 3):
        x = order[i]
        ax = adj[x]
        for j in range(i + 1, n - 2):
            u = order[j]
            au = adj[u]
            for k in range(j + 1, n - 1):
                v = order[k]
                if v in au or v not in ax:
                    continue
                for l in range(k + 1, n):
                    if order[l] in au:
                        return (x, u, v, order[l])
    return None


def naive_accepts_some_ordering(g: Graph) -> bool:
    """Does any vertex ordering pass the exhaustive quadruple scan?

    Enumerates all permutations, skipping reversals (a quadruple violation
    maps to a quadruple violation of the reversed order, so an ordering
    passes iff its reversal does).
    """
    vs = list(g.vertices())
    if len(vs) == 1:
        return True
    for perm in permutations(vs):
        if perm[0] > perm[-1]:
            continue
        if naive_four_point_scan(g, perm) is None:
            return True
    return False


def oracle_interval_overlap_edges(spans) -> set:
    """Pairwise closed-interval overlap; takes an id -> (lo, hi) mapping
    or a sequence whose i-th entry belongs to vertex i + 1."""
    if not isinstance(spans, dict):
        spans = {i + 1: s for i, s in enumerate(spans)}
    out = set()
    for u, v in combinations(sorted(spans), 2):
        alo, ahi = spans[u]
        blo, bhi = spans[v]
        if max(alo, blo) <= min(ahi, bhi):
            out.add(frozenset((u, v)))
    return out


# ---------------------------------------------------------------------------
# random instance generators (plain `random.Random`, rational outputs)


def random_fraction(rng: random.Random, lo: int, hi: int, den=(1, 2, 3, 4, 8)):
    d = rng.choice(den)
    return F(rng.randint(lo * d, hi * d), d)


def random_realization(rng: random.Random, n: int, d: int = 1) -> Realization:
    items = {}
    for v in range(1, n + 1):
        box = []
        point = []
        for _ in range(d):
            lo = random_fraction(rng, -8, 8)
            hi = lo + random_fraction(rng, 0, 10)
            p = lo + (hi - lo) * F(rng.randint(0, 16), 16)
            box.append((lo, hi))
            point.append(p)
        items[v] = (tuple(box), tuple(point))
    return Realization.build(d, items)


def random_central_realization(rng: random.Random, n: int) -> Realization:
    items = {}
    for v in range(1, n + 1):
        c = random_fraction(rng, -10, 10)
        r = random_fraction(rng, 0, 6) + F(1, 8)
        items[v] = ((c - r, c + r), c)
    return Realization.build(1, items)


def random_connected_graph(rng: random.Random, n: int, extra_edge_prob=0.3) -> Graph:
    """Random spanning tree plus independent extra edges."""
    edges = set()
    for v in range(2, n + 1):
        edges.add(frozenset((rng.randint(1, v - 1), v)))
    for u, v in combinations(range(1, n + 1), 2):
        if rng.random() < extra_edge_prob:
            edges.add(frozenset((u, v)))
    return Graph.from_edges(n, [tuple(sorted(e)) for e in edges])


# ---------------------------------------------------------------------------
# greedy interval-placement invariants


def assert_greedy_invariants(state) -> None:
    """The four structural conditions that must hold after every greedy
    insertion (reach = right box end, rank = position in the processing
    order):

    1. representative points strictly increase in insertion order;
    2. vertices whose closed neighborhoods end earlier reach less far;
    3. every box starts before the point of its earliest-ranked closed
       neighbor;
    4. an earlier vertex reaches past a later vertex's point exactly when
       its closed neighborhood extends to that rank.
    """
    pts = [state.points[v] for v in state.placed]
    assert all(a < b for a, b in zip(pts, pts[1:]))

    reach = {v: state.points[v] + state.radii[v] for v in state.placed}
    point_at_rank = {state.rank[v]: state.points[v] for v in state.placed}
    for a in state.placed:
        left = state.points[a] - state.radii[a]
        assert left < point_at_rank[state.nbr_lo[a]]
        for c in state.placed:
            if state.nbr_hi[a] < state.nbr_hi[c]:
                assert reach[a] < reach[c]
            if state.rank[a] < state.rank[c]:
                if state.nbr_hi[a] < state.rank[c]:
                    assert reach[a] < state.points[c]
                else:
                    assert reach[a] >= state.points[c]


# ---------------------------------------------------------------------------
# rational linear systems: generator, grid oracle, witness check


def random_constraint_system(rng: random.Random, max_vars: int = 3):
    """Random small-rational system over at most `max_vars` variables.

    Every system includes the box bounds |x_i| <= 4, so its feasible
    region lies inside the dense grid scanned by `grid_feasible`.  Half
    the instances are anchored: bounds are loosened until a pre-chosen
    point of the 1/8 grid satisfies everything, making the system
    feasible with an on-grid witness.  Unanchored instances flip a
    constraint with a gap half the time so both verdicts show up in
    bulk runs.  Returns (system, anchored).
    """
    from andbox.feasibility import LinearConstraintSystem, constraint

    k = rng.randint(1, max_vars)
    names = tuple("xyz"[:k])
    cons = []
    for i in range(k):
        unit = [F(0)] * k
        unit[i] = F(1)
        cons.append(constraint(tuple(unit), F(4)))
        unit = [F(0)] * k
        unit[i] = F(-1)
        cons.append(constraint(tuple(unit), F(4)))
    anchored = rng.random() < 0.5
    anchor = tuple(F(rng.randint(-32, 32), 8) for _ in range(k))
    for _ in range(rng.randint(1, 4)):
        coeffs = tuple(F(rng.randint(-2, 2)) for _ in range(k))
        strict = rng.random() < 0.3
        bound = F(rng.randint(-32, 32), 8)
        if anchored:
            value = sum(c * a for c, a in zip(coeffs, anchor))
            if strict and value >= bound:
                bound = value + F(1, 8)
            elif not strict and value > bound:
                bound = value
        cons.append(constraint(coeffs, bound, strict=strict))
    if not anchored and rng.random() < 0.5:
        pick = rng.choice([c for c in cons if any(c.coeffs)])
        flipped = tuple(-c for c in pick.coeffs)
        gap = F(rng.randint(0, 8), 8)
        cons.append(constraint(flipped, -pick.bound - gap, strict=gap == 0))
    return LinearConstraintSystem(names, tuple(cons)), anchored


def grid_feasible(system) -> bool:
    """Dense scan of the 1/8 grid on [-4, 4]^k, exact via integer scaling.

    Coordinates are x = X/8 with X an int64 array; each constraint is
    multiplied by 8 times its denominators' lcm so every comparison is
    integer-exact.
    """
    import numpy as np

    k = len(system.variables)
    axis = np.arange(-32, 33, dtype=np.int64)
    grids = np.meshgrid(*([axis] * k), indexing="ij", sparse=True)
    ok = np.ones((65,) * k, dtype=bool)
    for c in system.constraints:
        den = 1
        for x in list(c.coeffs) + [c.bound]:
            den = math.lcm(den, x.denominator)
        lhs = np.zeros((), dtype=np.int64)
        for ci, X in zip(c.coeffs, grids):
            lhs = lhs + int(ci * den) * X
        rhs = int(c.bound * den * 8)
        ok = ok & ((lhs < rhs) if c.strict else (lhs <= rhs))
    return bool(ok.any())


def satisfies_all(system, witness) -> bool:
    """Exact check of a witness against every constraint."""
    for c in system.constraints:
        value = sum(ci * wi for ci, wi in zip(c.coeffs, witness))
        if c.strict:
            if not value < c.bound:
                return False
        elif not value <= c.bound:
            return False
    return True


# ---------------------------------------------------------------------------
# worked objects shared across files


@pytest.fixture
def paw_graph() -> Graph:
    # triangle 1-2-3 with pendant 4 on vertex 3
    return Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)])


@pytest.fixture
def paw_realization() -> Realization:
    return Realization.build(
        1,
        {
            1: ((F(1), F(9, 2)), F(2)),
            2: ((F(1, 2), F(19, 4)), F(3)),
            3: ((F(3, 2), F(11, 2)), F(4)),
            4: ((F(9, 4), F(13, 2)), F(5)),
        },
    )


@pytest.fixture
def square_graph() -> Graph:
    return Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


@pytest.fixture(scope="session")
def connected_atlas():
    """All 996 connected graphs on 1..7 vertices, relabeled to 1..n."""
    nx = pytest.importorskip("networkx")
    out = []
    for G in nx.graph_atlas_g():
        if G.number_of_nodes() < 1 or not nx.is_connected(G):
            continue
        mapping = {u: i + 1 for i, u in enumerate(sorted(G.nodes()))}
        out.append(
            Graph.from_edges(
                G.number_of_nodes(),
                [(mapping[u], mapping[v]) for u, v in G.edges()],
            )
        )
    assert len(out) == 996
    return out


# ---------------------------------------------------------------------------
# acceptance reporting: one line per check, printed after the run


ACCEPTANCE_LINES: list = []
ACCEPTANCE_TOTAL = 12


@pytest.fixture(scope="session")
def acceptance_record():
    def record(num: int, name: str, ok: bool, elapsed_s: float, budget_s: float, detail: str = ""):
        verdict = "PASS" if ok and elapsed_s < budget_s else "FAIL"
        line = (
            f"[{num:2}/12] {verdict}  {name}: {elapsed_s:.3f}s"
            f" (budget {budget_s:g}s)" + (f"  {detail}" if detail else "")
        )
        ACCEPTANCE_LINES.append(line)
        assert ok, f"check {num} failed: {name} {detail}"
        assert elapsed_s < budget_s, f"check {num} over budget: {elapsed_s:.3f}s >= {budget_s}s"

    return record


@pytest.fixture(scope="session")
def central_pool():
    """Central realizations produced by the acceptance suite; the final
    acceptance check replays the triangle-model equivalence on all of them."""
    return []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance checks")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
    if len(ACCEPTANCE_LINES) < ACCEPTANCE_TOTAL:
        terminalreporter.write_line(
            f"warning: only {len(ACCEPTANCE_LINES)}/{ACCEPTANCE_TOTAL} checks reported"
        )
