"""Degree, triangle, clustering, and k-core statistics.

The headline numbers follow the usual conventions for network summary
tables: T is the *maximum* per-vertex triangle count, T_avg the mean,
clustering is zero for vertices of degree < 2, and gamma_K measures how much
of a maximum clique sits inside the top core.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph

__all__ = [
    "TriangleCounts",
    "CoreDecomposition",
    "CliqueBounds",
    "GraphStats",
    "triangle_counts",
    "clustering",
    "core_decomposition",
    "clique_bounds",
    "kcore_recall",
    "stats",
]


@dataclass(frozen=True)
class TriangleCounts:
    """Per-vertex triangle participation; ``total`` counts distinct triangles."""

    per_vertex: np.ndarray
    total: int
    max_t: int
    avg_t: float


@dataclass(frozen=True)
class CoreDecomposition:
    """Core numbers plus the peel order that produced them.

    ``order`` lists vertices in the order they were peeled (minimum current
    degree first); reversing it gives the root order used by the clique
    search. ``degeneracy`` is K(G) = max core number.
    """

    core_number: np.ndarray
    degeneracy: int
    order: np.ndarray

    @property
    def max_core_vertices(self) -> np.ndarray:
        return np.flatnonzero(self.core_number == self.degeneracy)


@dataclass(frozen=True)
class CliqueBounds:
    """Cheap bounds bracketing the clique number.

    ``kcore_ub`` = K(G)+1 and ``degree_ub`` = d_max+1 are valid upper bounds
    and ``best_ub`` is their minimum. ``triangle_ub`` = floor(sqrt(2*T)) is
    reported for reference only: it undershoots on small dense graphs (K5
    already beats it), so it never feeds pruning. ``lower_delta`` is the
    minimum degree.
    """

    lower_delta: int
    kcore_ub: int
    degree_ub: int
    triangle_ub: int
    best_ub: int


@dataclass(frozen=True)
class GraphStats:
    """One summary row. ``omega``/``gamma_K`` are None unless requested."""

    n: int
    m: int
    d_max: int
    d_avg: float
    mean_cc: float
    global_cc: float
    T: int
    T_avg: float
    sqrt_2T: int
    K: int
    omega: int | None = None
    gamma_K: float | None = None


def triangle_counts(g: Graph) -> TriangleCounts:
    """Count triangles through every vertex by merging sorted neighbor lists."""
    kern = _kernels.get_backend()
    if g.n == 0:
        return TriangleCounts(np.zeros(0, dtype=np.int64), 0, 0, 0.0)
    per = kern.triangle_counts(g.indptr, g.indices, g.n)
    total = int(per.sum()) // 3
    return TriangleCounts(per, total, int(per.max()), float(per.mean()))


def clustering(
    g: Graph, tri: TriangleCounts | None = None
) -> tuple[np.ndarray, float, float]:
    """Per-vertex clustering, its mean, and the global (transitivity) ratio.

    cc(v) = t(v) / C(deg(v), 2), defined as 0 when deg(v) < 2. The global
    coefficient is 3*triangles / wedges, 0 when the graph has no wedge.
    """
    if tri is None:
        tri = triangle_counts(g)
    if g.n == 0:
        return np.zeros(0), 0.0, 0.0
    deg = g.degrees().astype(np.float64)
    wedges = deg * (deg - 1) / 2.0
    cc = np.zeros(g.n, dtype=np.float64)
    ok = wedges > 0
    cc[ok] = tri.per_vertex[ok] / wedges[ok]
    total_wedges = float(wedges.sum())
    global_cc = 3.0 * tri.total / total_wedges if total_wedges > 0 else 0.0
    return cc, float(cc.mean()), global_cc


def core_decomposition(g: Graph) -> CoreDecomposition:
    """Peel the graph to core numbers; cached on the graph object."""
    cached = getattr(g, "_core_cache", None)
    if cached is not None:
        return cached
    kern = _kernels.get_backend()
    core, order = kern.core_peel(g.indptr, g.indices, g.n)
    degeneracy = int(core.max()) if g.n else 0
    decomp = CoreDecomposition(core, degeneracy, order)
    g._core_cache = decomp
    return decomp


def clique_bounds(g: Graph) -> CliqueBounds:
    """Bracket omega from degrees, cores, and triangles (see CliqueBounds)."""
    if g.n == 0:
        return CliqueBounds(0, 0, 0, 0, 0)
    deg = g.degrees()
    tri = triangle_counts(g)
    decomp = core_decomposition(g)
    if tri.max_t > 0:
        triangle_ub = math.isqrt(2 * tri.max_t)
    else:
        triangle_ub = 2 if g.m > 0 else 1
    kcore_ub = decomp.degeneracy + 1
    degree_ub = int(deg.max()) + 1
    return CliqueBounds(
        lower_delta=int(deg.min()),
        kcore_ub=kcore_ub,
        degree_ub=degree_ub,
        triangle_ub=triangle_ub,
        best_ub=min(kcore_ub, degree_ub),
    )


def kcore_recall(g: Graph, clique, decomp: CoreDecomposition | None = None) -> float:
    """Fraction of a maximum clique inside the top core (gamma_K).

    Raises ValueError when ``clique`` is empty or not actually a clique.
    """
    from .clique import verify_clique

    verts = list(clique)
    if not verts:
        raise ValueError("clique is empty")
    if not verify_clique(g, verts):
        raise ValueError("vertices do not form a clique")
    if decomp is None:
        decomp = core_decomposition(g)
    top = decomp.core_number[np.asarray(verts)] == decomp.degeneracy
    return float(np.count_nonzero(top)) / len(verts)


def stats(g: Graph, with_clique: bool = False, threads: int = 1) -> GraphStats:
    """Assemble the summary row for one graph.

    ``with_clique`` additionally runs the exact clique search to fill
    ``omega`` and ``gamma_K``; everything else is linear-ish work.
    """
    if g.n == 0:
        empty_omega = 0 if with_clique else None
        empty_gamma = 0.0 if with_clique else None
        return GraphStats(0, 0, 0, 0.0, 0.0, 0.0, 0, 0.0, 0, 0, empty_omega, empty_gamma)
    deg = g.degrees()
    tri = triangle_counts(g)
    _, mean_cc, global_cc = clustering(g, tri)
    decomp = core_decomposition(g)
    omega = None
    gamma = None
    if with_clique:
        from .clique import max_clique_exact

        res = max_clique_exact(g, threads=threads)
        omega = res.size
        gamma = kcore_recall(g, res.vertices, decomp) if res.vertices else 0.0
    return GraphStats(
        n=g.n,
        m=g.m,
        d_max=int(deg.max()),
        d_avg=float(2.0 * g.m / g.n),
        mean_cc=mean_cc,
        global_cc=global_cc,
        T=tri.max_t,
        T_avg=tri.avg_t,
        sqrt_2T=math.isqrt(2 * tri.max_t),
        K=decomp.degeneracy,
        omega=omega,
        gamma_K=gamma,
    )
