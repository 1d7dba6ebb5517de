"""Compare the compiled and pure-Python ordering-search kernels.

Runs the backtracking search for a four-point-free ordering on a few
fixed instances with both backends and reports nodes, status, and wall
time.  Usage: python benchmarks/bench_kernels.py [--budget N]
"""

from __future__ import annotations

import argparse
import time

from andbox import kernels
from andbox.families import complete_multipartite, h_graph, random_block_graph
from andbox.graphs import Graph


def _masks(g: Graph):
    return [sum(1 << (u - 1) for u in g.neighbors(v)) for v in g.vertices()]


def _instances():
    yield "octahedron (n=6)", complete_multipartite([2, 2, 2]).graph
    yield "h(2,2,2) = K(2,3) (n=5)", h_graph(2, 2, 2).graph
    yield "h(3,4,4) (n=10)", h_graph(3, 4, 4).graph
    yield "h(4,4,4) (n=11)", h_graph(4, 4, 4).graph
    yield "random block graph (n=16)", random_block_graph(16, seed=5).graph


STATUS = {0: "found", 1: "not_member", 2: "exhausted"}


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--budget", type=int, default=10**8)
    args = ap.parse_args()

    have_compiled = kernels.backend_name() == "compiled"
    if not have_compiled:
        print("compiled backend unavailable; showing pure backend only")
    header = f"{'instance':30} {'backend':9} {'status':11} {'nodes':>10} {'ms':>9}"
    print(header)
    print("-" * len(header))
    for name, g in _instances():
        masks = _masks(g)
        rows = []
        for label, fn in (
            ("pure", kernels.search_order_pure),
            ("compiled", kernels.search_order_compiled),
        ):
            if label == "compiled" and not have_compiled:
                continue
            t0 = time.perf_counter()
            status, order, nodes = fn(masks, args.budget)
            ms = (time.perf_counter() - t0) * 1000
            rows.append((label, STATUS[status], nodes, ms))
            print(
                f"{name:30} {label:9} {STATUS[status]:11} {nodes:>10} {ms:>9.2f}",
                flush=True,
            )
        if len(rows) == 2:
            if rows[0][1:3] != rows[1][1:3]:
                raise SystemExit(f"backend mismatch on {name}: {rows}")
            speed = rows[0][3] / rows[1][3] if rows[1][3] else float("inf")
            print(
                f"{'':30} {'':9} {'agree':11} {'speedup':>10} {speed:>8.1f}x",
                flush=True,
            )


if __name__ == "__main__":
    main()
