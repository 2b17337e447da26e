"""Compare the jitted kernels against the pure-numpy fallback.

Run directly:

    python3 benchmarks/bench_backends.py

The script times the six library entry points whose inner loops dispatch
through ``cliquetools._kernels``, once per backend, by setting
``CLIQUETOOLS_BACKEND`` around each call. Inputs are built once and shared,
the jitted backend is compiled up front, and each cell reports the best of
three runs, so compile time and allocation noise stay out of the numbers.
"""

from __future__ import annotations

import os
import random
import time
from contextlib import contextmanager

from cliquetools import (
    Graph,
    core_decomposition,
    max_clique_exact,
    max_clique_heuristic,
    parse_temporal_edge_list,
    reach,
    strong_reachability,
    triangle_counts,
    warm_up,
)
from cliquetools._kernels import ENV_VAR

REPEATS = 3


@contextmanager
def backend(name: str):
    old = os.environ.get(ENV_VAR)
    os.environ[ENV_VAR] = name
    try:
        yield
    finally:
        if old is None:
            del os.environ[ENV_VAR]
        else:
            os.environ[ENV_VAR] = old


def best_of(fn) -> float:
    best = float("inf")
    for _ in range(REPEATS):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def gnp(seed: int, n: int, p: float) -> Graph:
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_pairs(pairs, n=n)


def temporal(seed: int, n: int, contacts: int, t_max: int):
    rng = random.Random(seed)
    lines = []
    while len(lines) < contacts:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            lines.append(f"{u} {v} {rng.randrange(t_max)}\n")
    return parse_temporal_edge_list("".join(lines), directed=True)


def main() -> int:
    try:
        import numba  # noqa: F401

        backends = ("numba", "numpy")
    except ImportError:
        print("numba is not importable; timing the numpy fallback only\n")
        backends = ("numpy",)

    sparse = gnp(1, 2000, 0.01)
    dense = gnp(2, 90, 0.4)
    tg = temporal(3, 1500, 15000, t_max=200)
    with backend(backends[0]):
        warm_up()
        shared_reach = reach(tg)

    def peel_uncached():
        # core_decomposition memoizes on the graph; drop the memo so the
        # peel kernel runs on every repetition.
        if hasattr(sparse, "_core_cache"):
            del sparse._core_cache
        core_decomposition(sparse)

    workloads = [
        (f"triangle_counts   G({sparse.n}, m={sparse.m})", lambda: triangle_counts(sparse)),
        (f"core_decomposition G({sparse.n}, m={sparse.m})", peel_uncached),
        (f"clique heuristic  G({sparse.n}, m={sparse.m})", lambda: max_clique_heuristic(sparse)),
        (f"clique exact      G({dense.n}, m={dense.m})", lambda: max_clique_exact(dense)),
        (f"temporal reach    n={tg.n}, contacts={tg.n_edges}", lambda: reach(tg)),
        (f"strong reach pairs n={tg.n}", lambda: strong_reachability(shared_reach)),
    ]

    width = max(len(name) for name, _ in workloads)
    header = f"{'workload':<{width}}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for name, fn in workloads:
        cells = []
        for b in backends:
            with backend(b):
                cells.append(best_of(fn))
        row = f"{name:<{width}}" + "".join(f"{t:>11.4f}s" for t in cells)
        if len(cells) == 2 and cells[0] > 0:
            row += f"{cells[1] / cells[0]:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
