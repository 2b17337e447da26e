"""Temporal reachability and temporal strongly connected components.

A vertex w is temporally reachable from v when some path v -> ... -> w uses
edges with strictly increasing timestamps. All reach sets are computed in
one sweep over the edges in reverse time order: starting from self-loops,
processing edge (i, j, t) as R(i) |= R(j) folds every later-departing path
out of j into i. Edges sharing a timestamp are processed as one batch
against the pre-batch sets, so equal times never chain.

The largest tSCC is the maximum clique of the strong reachability graph,
which keeps {u, v} exactly when u and v reach each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import IO

import numpy as np

from . import _kernels
from .clique import CliqueResult, SearchBounds, max_clique_exact
from .graph import Graph, ParseError, _csr_from_pairs, _iter_lines
from .metrics import GraphStats, stats

__all__ = [
    "TemporalEdge",
    "TemporalGraph",
    "ReachabilityGraph",
    "TsccResult",
    "parse_temporal_edge_list",
    "reach",
    "strong_reachability",
    "max_tscc",
]


@dataclass(frozen=True)
class TemporalEdge:
    src: int
    dst: int
    time: float


@dataclass
class TemporalGraph:
    """Contact records sorted by ascending time, ties in input order.

    One record per input line (after self-loop removal); when ``directed`` is
    False each record stands for a bidirectional contact, and the expansion
    into both directions happens inside :func:`reach`.
    """

    labels: list[str]
    src: np.ndarray
    dst: np.ndarray
    time: np.ndarray
    directed: bool = False

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return len(self.src)

    def __len__(self) -> int:
        return len(self.src)

    def edge(self, i: int) -> TemporalEdge:
        return TemporalEdge(int(self.src[i]), int(self.dst[i]), float(self.time[i]))


@dataclass
class ReachabilityGraph:
    """Per-vertex temporal reach sets, packed as width-n bitsets.

    The implicit self-loop is excluded: ``v in reach_set(v)`` only when v
    lies on a time-respecting cycle through itself (never, here, since
    timestamps must strictly increase and self-loops are dropped).
    """

    labels: list[str]
    bits: np.ndarray

    @property
    def n(self) -> int:
        return len(self.labels)

    def reach_set(self, v: int) -> np.ndarray:
        """Vertices temporally reachable from v, ascending."""
        row = self.bits[v]
        out = []
        for w, word in enumerate(row):
            word = int(word)
            while word:
                lsb = word & -word
                out.append((w << 6) + lsb.bit_length() - 1)
                word ^= lsb
        return np.array(out, dtype=np.int64)

    def contains(self, u: int, v: int) -> bool:
        """Whether v is temporally reachable from u."""
        return bool((int(self.bits[u, v >> 6]) >> (v & 63)) & 1)

    def sizes(self) -> np.ndarray:
        if hasattr(np, "bitwise_count"):
            return np.bitwise_count(self.bits).sum(axis=1).astype(np.int64)
        back = _kernels.numpy_backend
        return np.array(
            [back._row_popcount(self.bits[v]) for v in range(self.n)], dtype=np.int64
        )


@dataclass(frozen=True)
class TsccResult:
    """Largest temporal strongly connected component.

    ``vertices`` index into the temporal graph's labels; ``exact`` is False
    when a time limit truncated the clique search, in which case the
    best-found component is reported. ``reach_stats`` summarizes the strong
    reachability graph the component was extracted from.
    """

    vertices: tuple[int, ...]
    size: int
    exact: bool
    reach_stats: GraphStats
    clique: CliqueResult


def parse_temporal_edge_list(
    source: str | bytes | Path | IO, *, directed: bool = False
) -> TemporalGraph:
    """Parse ``src dst time`` lines into a :class:`TemporalGraph`.

    Same dialect as the static parser (whitespace or commas, ``#``/``%``
    comments) with a third mandatory token: a non-negative 64-bit real
    timestamp. Later tokens are ignored. Self-loops are dropped; their
    endpoints still count as vertices.
    """
    labels: list[str] = []
    ids: dict[str, int] = {}
    src: list[int] = []
    dst: list[int] = []
    times: list[float] = []

    def intern(tok: str) -> int:
        i = ids.get(tok)
        if i is None:
            i = len(labels)
            ids[tok] = i
            labels.append(tok)
        return i

    for line_no, line in enumerate(_iter_lines(source), start=1):
        stripped = line.strip()
        if not stripped or stripped[0] in "#%":
            continue
        toks = stripped.replace(",", " ").split()
        if len(toks) < 3:
            raise ParseError(f"expected at least 3 tokens, got {len(toks)}", line_no)
        u = intern(toks[0])
        v = intern(toks[1])
        try:
            t = float(toks[2])
        except ValueError:
            raise ParseError(f"bad timestamp {toks[2]!r}", line_no) from None
        if not np.isfinite(t) or t < 0:
            raise ParseError(f"timestamp must be a non-negative real, got {toks[2]}", line_no)
        if u == v:
            continue
        src.append(u)
        dst.append(v)
        times.append(t)

    src_a = np.asarray(src, dtype=np.int32)
    dst_a = np.asarray(dst, dtype=np.int32)
    time_a = np.asarray(times, dtype=np.float64)
    order = np.argsort(time_a, kind="stable")
    return TemporalGraph(
        labels=labels,
        src=src_a[order],
        dst=dst_a[order],
        time=time_a[order],
        directed=directed,
    )


def reach(tg: TemporalGraph) -> ReachabilityGraph:
    """All temporal reach sets in one reverse-time sweep."""
    n = tg.n
    nw = max((n + 63) >> 6, 1)
    if n == 0:
        return ReachabilityGraph([], np.zeros((0, nw), dtype=np.uint64))
    src = tg.src[::-1]
    dst = tg.dst[::-1]
    times = tg.time[::-1]
    if not tg.directed:
        both_src = np.empty(2 * len(src), dtype=np.int32)
        both_dst = np.empty(2 * len(src), dtype=np.int32)
        both_src[0::2] = src
        both_src[1::2] = dst
        both_dst[0::2] = dst
        both_dst[1::2] = src
        src, dst = both_src, both_dst
        times = np.repeat(times, 2)
    if len(times):
        cuts = np.flatnonzero(np.diff(times) != 0) + 1
        batch_ptr = np.concatenate(
            [[0], cuts, [len(times)]]
        ).astype(np.int64)
    else:
        batch_ptr = np.zeros(1, dtype=np.int64)
    kern = _kernels.get_backend()
    bits = kern.reach_sweep(n, nw, src, dst, batch_ptr)
    ids = np.arange(n)
    bits[ids, ids >> 6] &= ~(np.uint64(1) << (ids & 63).astype(np.uint64))
    return ReachabilityGraph(list(tg.labels), bits)


def strong_reachability(r: ReachabilityGraph) -> Graph:
    """Static graph keeping {u, v} iff u and v temporally reach each other."""
    kern = _kernels.get_backend()
    us, vs = kern.mutual_pairs(r.bits)
    return _csr_from_pairs(r.n, us.astype(np.int64), vs.astype(np.int64), list(r.labels))


def max_tscc(
    tg: TemporalGraph, bounds: SearchBounds | None = None, threads: int = 1
) -> TsccResult:
    """Largest temporal strongly connected component.

    Composes reach -> strong reachability -> exact maximum clique. Under a
    time limit the clique search degrades to its best witness (greedy warm
    start included), reported with ``exact=False``.
    """
    rg = strong_reachability(reach(tg))
    res = max_clique_exact(rg, bounds=bounds, threads=threads)
    return TsccResult(
        vertices=res.vertices,
        size=res.size,
        exact=res.exact,
        reach_stats=stats(rg),
        clique=res,
    )
