"""Benchmark the numba kernels against the pure-numpy fallback.

Generates a preferential-attachment graph, prepares a mid-campaign
diffusion state, and times each hot kernel under both backends on
identical inputs.  The numba backend is warmed up first so JIT
compilation is not counted.

Usage:
    python benchmarks/bench_kernels.py [--nodes 20000] [--edges-per-node 10]
                                       [--repeat 5] [--seed 0]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from lvm import NodeParams, NodeState, build_graph, init_states
from lvm.kernels import numba_backend, numpy_backend


def preferential_attachment_edges(n: int, m: int, rng: np.random.Generator):
    """Barabasi-Albert edge list: each new node attaches to m distinct
    targets drawn from the degree-weighted repeated-nodes list."""
    targets = list(range(m))
    repeated: list[int] = []
    pairs = []
    for v in range(m, n):
        for u in set(targets):
            pairs.append((v, u))
            repeated.extend((v, u))
        targets = [repeated[i] for i in rng.integers(0, len(repeated), size=m)]
    return pairs


def best_of(repeat: int, fn, *args) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nodes", type=int, default=20_000)
    ap.add_argument("--edges-per-node", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    g = build_graph(preferential_attachment_edges(args.nodes,
                                                  args.edges_per_node, rng))
    print(f"graph: n={g.n} edges={g.edge_count}")

    # Mid-campaign state: 2% infectious, 1% expired, 1% failed.
    ds = init_states(g, t_inf=50)
    draws = rng.random(g.n)
    ds.states[draws < 0.02] = NodeState.INFECTED_INFECTIOUS
    ds.infected_at[draws < 0.02] = 0
    ds.states[(draws >= 0.02) & (draws < 0.03)] = NodeState.INFECTED_NON_INFECTIOUS
    ds.infected_at[(draws >= 0.02) & (draws < 0.03)] = -50
    ds.states[(draws >= 0.03) & (draws < 0.04)] = NodeState.SEEDING_FAILED

    params = NodeParams.constant(g.n, p_max=0.5, theta=5)
    states = ds.states
    n_plus = numpy_backend.count_infectious(g.indptr, g.indices, states)
    cand = np.flatnonzero(states == NodeState.NON_INFECTED).astype(np.int64)
    x = rng.random(g.n)

    cases = [
        ("adj_matvec", lambda be: be.adj_matvec(g.indptr, g.indices, x)),
        ("count_infectious",
         lambda be: be.count_infectious(g.indptr, g.indices, states)),
        ("triangle_counts",
         lambda be: be.triangle_counts(g.indptr, g.indices)),
    ]
    for depth in (0, 1, 2):
        cases.append((f"social_scores depth={depth}",
                      lambda be, d=depth: be.social_scores(
                          g.indptr, g.indices, states, n_plus, params.theta,
                          params.p_max, params.p_min, cand, d)))

    print(f"{'kernel':<24}{'numba':>12}{'numpy':>12}{'speedup':>10}")
    for name, call in cases:
        call(numba_backend)  # JIT warm-up
        t_nb = best_of(args.repeat, call, numba_backend)
        t_np = best_of(args.repeat, call, numpy_backend)
        print(f"{name:<24}{t_nb * 1e3:>10.2f}ms{t_np * 1e3:>10.2f}ms"
              f"{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
