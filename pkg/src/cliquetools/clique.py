"""Maximum clique search.

The exact solver is a branch-and-bound over per-root neighborhoods:

* roots are processed in reverse peel order (highest core number first), so
  large cliques surface early;
* each root only considers neighbors that come later in the peel order, which
  partitions the clique space (every clique is explored exactly once, from
  its earliest-peeled member) and keeps candidate sets no larger than the
  degeneracy;
* candidate sets are fixed-width bitsets over the reindexed neighborhood,
  branched in descending subgraph-degree order;
* a root is skipped outright when its degree is below the incumbent size, a
  branch is cut when members + candidates cannot beat the incumbent, and
  neighborhood vertices whose local core number is too small to participate
  in an improving clique are dropped before the search starts.

Workers share the incumbent through :class:`SharedBest`: they publish at the
end of each root subtree and refresh their local bound at the start of each
subtree and every 2**14 steps inside the kernel. Stale reads only weaken
pruning, never correctness, so the reported size is identical for any thread
count.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph
from .metrics import core_decomposition

__all__ = [
    "CliqueResult",
    "SearchBounds",
    "SharedBest",
    "max_clique_exact",
    "max_clique_heuristic",
    "verify_clique",
]

_NO_UB = 1 << 60


@dataclass(frozen=True)
class CliqueResult:
    """Outcome of a clique search.

    ``vertices`` induce a complete subgraph and ``size == len(vertices)``,
    with one exception: when a user-supplied lower bound was not beaten, the
    result carries ``size == lb`` with an empty witness, meaning "no clique
    larger than lb exists" (``exact`` still reflects whether the search ran
    to completion). ``exact`` is True when the search completed or stopped at
    the requested upper bound; only a time-limit truncation makes it False.
    """

    vertices: tuple[int, ...]
    size: int
    exact: bool
    steps: int
    wall_time: float
    hit_ub: bool = False
    timed_out: bool = False


@dataclass(frozen=True)
class SearchBounds:
    """Optional search window: seed size, early-stop size, wall-clock budget."""

    lb: int = 0
    ub: int | None = None
    time_limit: float | None = None

    def __post_init__(self):
        if self.lb < 0:
            raise ValueError(f"lb must be >= 0, got {self.lb}")
        if self.ub is not None:
            if self.ub < 1:
                raise ValueError(f"ub must be >= 1, got {self.ub}")
            if self.lb > self.ub:
                raise ValueError(f"need lb <= ub, got lb={self.lb} ub={self.ub}")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError(f"time_limit must be positive, got {self.time_limit}")


class SharedBest:
    """Monotone shared incumbent with a stop flag.

    ``size_buf`` and ``stop_buf`` are plain numpy scalars that jitted kernels
    read without locking; publishing goes through :meth:`offer`, which takes
    the lock and only ever raises the size. ``trace`` records every accepted
    size in publish order (non-decreasing by construction).
    """

    def __init__(self, initial_size: int = 0, witness: np.ndarray | None = None):
        self._lock = threading.Lock()
        self.size_buf = np.array([initial_size], dtype=np.int64)
        self.stop_buf = np.zeros(1, dtype=np.uint8)
        self.witness = witness
        self.stop_reason: str | None = None
        self.trace: list[int] = []

    @property
    def best_size(self) -> int:
        return int(self.size_buf[0])

    def offer(self, size: int, witness: np.ndarray) -> bool:
        """Atomic max; returns True when this witness became the incumbent."""
        with self._lock:
            if size <= self.size_buf[0]:
                return False
            self.size_buf[0] = size
            self.witness = witness
            self.trace.append(size)
            return True

    def request_stop(self, reason: str) -> None:
        with self._lock:
            if self.stop_reason is None:
                self.stop_reason = reason
            self.stop_buf[0] = 1


def verify_clique(g: Graph, vertices) -> bool:
    """True iff ``vertices`` are distinct and pairwise adjacent in ``g``."""
    verts = list(vertices)
    if len(set(verts)) != len(verts):
        return False
    for v in verts:
        if not 0 <= v < g.n:
            return False
    for i, u in enumerate(verts):
        nb = g.neighbors(u)
        for v in verts[i + 1 :]:
            j = np.searchsorted(nb, v)
            if j >= len(nb) or nb[j] != v:
                return False
    return True


def max_clique_heuristic(g: Graph, threads: int = 1) -> CliqueResult:
    """Greedy clique from every start vertex, keeping the best.

    Each start grows by repeatedly adding the largest-degree common neighbor
    of the members so far (smallest id on ties). Runs in O(n * d_max^2).
    Start vertices are split into contiguous chunks across ``threads``; the
    reduction keeps the earliest best-sized witness, so the result does not
    depend on the thread count. ``exact`` is always False.
    """
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    t0 = time.perf_counter()
    if g.n == 0:
        return CliqueResult((), 0, False, 0, time.perf_counter() - t0)
    kern = _kernels.get_backend()
    degs = g.degrees().astype(np.int64)
    starts = np.arange(g.n, dtype=np.int32)
    chunks = [c for c in np.array_split(starts, threads) if len(c)]

    def run_chunk(chunk):
        wit = np.zeros(g.n, dtype=np.int32)
        size, pos, steps = kern.greedy_cliques(g.indptr, g.indices, degs, chunk, wit)
        return size, wit[:size].copy(), steps

    if len(chunks) == 1:
        outcomes = [run_chunk(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            outcomes = list(pool.map(run_chunk, chunks))

    best_size, best_wit = 0, np.zeros(0, dtype=np.int32)
    total_steps = 0
    for size, wit, steps in outcomes:
        total_steps += steps
        if size > best_size:
            best_size, best_wit = size, wit
    verts = tuple(int(v) for v in np.sort(best_wit))
    return CliqueResult(verts, best_size, False, total_steps, time.perf_counter() - t0)


def max_clique_exact(
    g: Graph, bounds: SearchBounds | None = None, threads: int = 1
) -> CliqueResult:
    """Exact maximum clique search (see the module docstring for the plan).

    Semantics of the bounds:

    * ``lb`` seeds the incumbent. If nothing larger is found the result is
      ``size == lb`` with an empty witness ("no clique larger than lb").
      A greedy warm start raises the seed automatically when it beats lb.
    * ``ub`` stops the search the moment a clique of that size is found; the
      result is then exactly ``ub`` with ``hit_ub`` set and still ``exact``.
    * ``time_limit`` aborts the search, returning the best witness so far
      with ``exact=False`` and ``timed_out`` set.
    """
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    bounds = bounds or SearchBounds()
    ub = _NO_UB if bounds.ub is None else bounds.ub
    t0 = time.perf_counter()

    if g.n == 0:
        return CliqueResult((), bounds.lb, True, 0, time.perf_counter() - t0)

    warm = max_clique_heuristic(g, threads=threads)
    if warm.size >= ub:
        verts = warm.vertices[:ub]
        return CliqueResult(
            verts, ub, True, 0, time.perf_counter() - t0, hit_ub=True
        )

    if warm.size > bounds.lb:
        shared = SharedBest(warm.size, np.array(warm.vertices, dtype=np.int32))
    else:
        shared = SharedBest(bounds.lb, None)

    decomp = core_decomposition(g)
    peel_pos = np.empty(g.n, dtype=np.int64)
    peel_pos[decomp.order] = np.arange(g.n)
    roots = decomp.order[::-1].copy()
    degs = g.degrees()
    kern = _kernels.get_backend()

    next_idx = [0]
    idx_lock = threading.Lock()
    steps_box = [0]
    steps_lock = threading.Lock()
    deadline = None if bounds.time_limit is None else t0 + bounds.time_limit
    timer = None
    if bounds.time_limit is not None:
        remaining = max(deadline - time.perf_counter(), 1e-4)
        timer = threading.Timer(remaining, shared.request_stop, args=("time",))
        timer.daemon = True
        timer.start()

    def worker():
        local_steps = 0
        wit_buf = np.zeros(g.n, dtype=np.int32)
        try:
            while True:
                if shared.stop_buf[0]:
                    break
                if deadline is not None and time.perf_counter() > deadline:
                    shared.request_stop("time")
                    break
                with idx_lock:
                    i = next_idx[0]
                    next_idx[0] += 1
                if i >= len(roots):
                    break
                root = int(roots[i])
                best_now = shared.best_size
                if degs[root] < best_now:
                    continue
                nbrs = g.neighbors(root)
                cand = nbrs[peel_pos[nbrs] > peel_pos[root]]
                if len(cand) == 0 or 1 + len(cand) <= best_now:
                    continue
                cand, bits = _root_subgraph(g, cand, best_now)
                if len(cand) == 0 or 1 + len(cand) <= best_now:
                    continue
                local_steps += 1
                found, wl, st, status = kern.search_subtree(
                    bits, best_now, ub, shared.size_buf, shared.stop_buf, wit_buf
                )
                local_steps += int(st)
                if found > 0 and wl > 0:
                    wit = np.empty(wl + 1, dtype=np.int32)
                    wit[0] = root
                    wit[1:] = cand[wit_buf[:wl]]
                    if shared.offer(int(found), wit) and found >= ub:
                        shared.request_stop("ub")
                if status == _kernels.STATUS_STOP:
                    break
        finally:
            with steps_lock:
                steps_box[0] += local_steps

    if threads == 1:
        worker()
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(worker) for _ in range(threads)]
            for f in futures:
                f.result()
    if timer is not None:
        timer.cancel()

    timed_out = shared.stop_reason == "time"
    hit_ub = shared.stop_reason == "ub"
    wall = time.perf_counter() - t0
    steps = steps_box[0] + warm.steps
    if shared.witness is None:
        return CliqueResult(
            (), shared.best_size, not timed_out, steps, wall, timed_out=timed_out
        )
    verts = tuple(int(v) for v in np.sort(shared.witness))
    return CliqueResult(
        verts,
        shared.best_size,
        not timed_out,
        steps,
        wall,
        hit_ub=hit_ub,
        timed_out=timed_out,
    )


def _root_subgraph(g: Graph, cand: np.ndarray, best_now: int):
    """Induced bitset matrix over ``cand``, pruned and priority-ordered.

    Drops vertices whose core number within the neighborhood is too small to
    appear in a clique that beats ``best_now`` (the root itself adds one to
    every such clique, hence the +2). Remaining vertices are ordered by
    descending degree inside the subgraph, ties to the smaller id, and the
    adjacency rows are emitted in that order.
    """
    rows = _induced_rows(g, cand)
    if best_now >= 2:
        sub_core = _induced_core(cand, rows)
        keep = sub_core + 2 > best_now
        if not keep.all():
            cand = cand[keep]
            if len(cand) == 0:
                return cand, np.zeros((0, 0), dtype=np.uint64)
            rows = _induced_rows(g, cand)
    sub_deg = np.array([len(r) for r in rows], dtype=np.int64)
    order = np.lexsort((np.arange(len(cand)), -sub_deg))
    cand = cand[order]
    rank = np.empty(len(order), dtype=np.int64)
    rank[order] = np.arange(len(order))
    nv = len(cand)
    nw = (nv + 63) >> 6
    bits = np.zeros((nv, nw), dtype=np.uint64)
    for new_i, old_i in enumerate(order):
        cols = rank[rows[old_i]]
        np.bitwise_or.at(
            bits[new_i], cols >> 6, np.uint64(1) << (cols & 63).astype(np.uint64)
        )
    return cand, bits


def _induced_rows(g: Graph, cand: np.ndarray) -> list[np.ndarray]:
    """Adjacency of each cand vertex restricted to cand, as positions."""
    rows = []
    for v in cand:
        nb = g.neighbors(int(v))
        common = np.intersect1d(nb, cand, assume_unique=True)
        rows.append(np.searchsorted(cand, common))
    return rows


def _induced_core(cand: np.ndarray, rows: list[np.ndarray]) -> np.ndarray:
    """Core numbers of the induced subgraph described by ``rows``."""
    nv = len(cand)
    indptr = np.zeros(nv + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(r) for r in rows])
    indices = (
        np.concatenate(rows).astype(np.int32) if nv else np.zeros(0, dtype=np.int32)
    )
    kern = _kernels.get_backend()
    core, _ = kern.core_peel(indptr, indices, nv)
    return core
