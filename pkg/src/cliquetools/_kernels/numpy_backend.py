"""Pure-numpy kernel implementations.

This is the fallback path used when numba is unavailable or when
``CLIQUETOOLS_BACKEND=numpy`` is set. Every function here has a jitted twin
in :mod:`cliquetools._kernels.numba_backend` with identical semantics: same
results, same traversal order, same step counts. The equivalence is pinned
by tests, so behavioural changes must land in both files.
"""

from __future__ import annotations

import numpy as np

STATUS_DONE = 0
STATUS_UB = 1
STATUS_STOP = 2

_ONE = np.uint64(1)

if hasattr(np, "bitwise_count"):

    def _row_popcount(row: np.ndarray) -> int:
        return int(np.bitwise_count(row).sum())

else:  # numpy < 2.0
    _POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)

    def _row_popcount(row: np.ndarray) -> int:
        return int(_POP8[row.view(np.uint8)].sum())


def _first_bit(row: np.ndarray) -> int:
    nz = np.flatnonzero(row)
    if len(nz) == 0:
        return -1
    w = int(nz[0])
    word = int(row[w])
    return (w << 6) + ((word & -word).bit_length() - 1)


def full_mask(nv: int, nw: int) -> np.ndarray:
    """Row bitset with bits 0..nv-1 set."""
    row = np.zeros(nw, dtype=np.uint64)
    full, rem = divmod(nv, 64)
    row[:full] = np.uint64(0xFFFFFFFFFFFFFFFF)
    if rem:
        row[full] = np.uint64((1 << rem) - 1)
    return row


def triangle_counts(indptr, indices, n):
    """Per-vertex triangle participation counts (int64[n])."""
    t = np.zeros(n, dtype=np.int64)
    for u in range(n):
        nb = indices[indptr[u] : indptr[u + 1]]
        for v in nb[nb > u]:
            nbv = indices[indptr[v] : indptr[v + 1]]
            common = np.intersect1d(nb, nbv, assume_unique=True)
            if len(common):
                np.add.at(t, common, 1)
    return t


def core_peel(indptr, indices, n):
    """Bucket-queue peeling.

    Returns (core int32[n], order int32[n]) where ``order`` is the peel
    sequence: repeatedly remove a minimum-degree vertex, smallest id first
    within equal degrees at initialization. The scalar control flow matches
    the jitted twin exactly so both backends peel in the same order.
    """
    deg = np.asarray(np.diff(indptr), dtype=np.int64).copy()
    core = np.zeros(n, dtype=np.int32)
    order = np.zeros(n, dtype=np.int32)
    if n == 0:
        return core, order
    maxdeg = int(deg.max())
    bin_start = np.zeros(maxdeg + 2, dtype=np.int64)
    for v in range(n):
        bin_start[deg[v] + 1] += 1
    for d in range(1, maxdeg + 2):
        bin_start[d] += bin_start[d - 1]
    pos = np.zeros(n, dtype=np.int64)
    vert = np.zeros(n, dtype=np.int64)
    fill = bin_start[:-1].copy()
    for v in range(n):
        pos[v] = fill[deg[v]]
        vert[pos[v]] = v
        fill[deg[v]] += 1
    cur = 0
    for i in range(n):
        v = vert[i]
        cur = max(cur, int(deg[v]))
        core[v] = cur
        order[i] = v
        for k in range(indptr[v], indptr[v + 1]):
            u = int(indices[k])
            if deg[u] > deg[v] and pos[u] > i:
                du = deg[u]
                pu = pos[u]
                pw = bin_start[du]
                w = vert[pw]
                if u != w:
                    vert[pu] = w
                    vert[pw] = u
                    pos[u] = pw
                    pos[w] = pu
                bin_start[du] += 1
                deg[u] -= 1
    return core, order


def greedy_cliques(indptr, indices, degs, starts, wit_out):
    """Greedy clique growth from each start vertex.

    From each start, repeatedly add the common neighbor of all current
    members with the largest degree (first such vertex in ascending-id order
    on ties). Keeps the first maximum over ``starts``. The winning clique is
    written to ``wit_out``; returns (best_size, best_start_pos, steps) where
    steps counts every vertex added beyond a start.
    """
    best_size = 0
    best_pos = -1
    steps = 0
    for p, s in enumerate(starts):
        members = [int(s)]
        cand = indices[indptr[s] : indptr[s + 1]]
        while len(cand):
            at = int(np.argmax(degs[cand]))
            u = int(cand[at])
            members.append(u)
            steps += 1
            nbu = indices[indptr[u] : indptr[u + 1]]
            cand = np.intersect1d(cand, nbu, assume_unique=True)
        if len(members) > best_size:
            best_size = len(members)
            best_pos = p
            wit_out[: best_size] = members
    return best_size, best_pos, steps


def search_subtree(bits, start_bound, ub, shared_best, stop_flag, wit_out):
    """Branch-and-bound over one root neighborhood given as a bitset matrix.

    ``bits[i]`` holds the adjacency of subgraph vertex ``i`` over the
    subgraph, rows ordered by branching priority. Sizes are in whole-graph
    units (the implicit root contributes 1). Explores cliques strictly larger
    than the running bound, which starts at ``start_bound`` and is refreshed
    from ``shared_best`` every 2**14 steps. Returns
    (found, wit_len, steps, status); the witness holds subgraph indices.
    """
    nv, nw = bits.shape
    found = 0
    wit_len = 0
    steps = 0
    bound = int(start_bound)
    if nv == 0:
        return found, wit_len, steps, STATUS_DONE
    stack = np.zeros((nv + 1, nw), dtype=np.uint64)
    stack[0] = full_mask(nv, nw)
    chosen = np.zeros(nv + 1, dtype=np.int32)
    d = 0
    while d >= 0:
        avail = _row_popcount(stack[d])
        if avail == 0 or 1 + d + avail <= bound:
            d -= 1
            continue
        j = _first_bit(stack[d])
        stack[d, j >> 6] ^= _ONE << np.uint64(j & 63)
        steps += 1
        if steps & 16383 == 0:
            if stop_flag[0]:
                return found, wit_len, steps, STATUS_STOP
            if shared_best[0] > bound:
                bound = int(shared_best[0])
        chosen[d] = j
        size = d + 2
        if size > bound:
            bound = size
            found = size
            wit_len = d + 1
            wit_out[:wit_len] = chosen[:wit_len]
            if bound >= ub:
                return found, wit_len, steps, STATUS_UB
        new = stack[d] & bits[j]
        grow = _row_popcount(new)
        if grow and size + grow > bound:
            stack[d + 1] = new
            d += 1
    return found, wit_len, steps, STATUS_DONE


def reach_sweep(n, nw, src, dst, batch_ptr):
    """Reverse-time reachability closure.

    Edges arrive sorted by strictly decreasing timestamp; ``batch_ptr``
    delimits runs of equal timestamps. Every union in a batch reads the
    pre-batch sets, so equal-time edges cannot chain. Rows start with the
    self bit set; the caller decides whether to strip it.
    """
    reach = np.zeros((n, nw), dtype=np.uint64)
    ids = np.arange(n)
    reach[ids, ids >> 6] = _ONE << (ids & 63).astype(np.uint64)
    for b in range(len(batch_ptr) - 1):
        s, e = batch_ptr[b], batch_ptr[b + 1]
        snap = reach[dst[s:e]]
        np.bitwise_or.at(reach, src[s:e], snap)
    return reach


def mutual_pairs(reach):
    """Pairs u < v with u in R(v) and v in R(u), diagonal ignored."""
    n, nw = reach.shape
    if n == 0:
        return np.zeros(0, np.int32), np.zeros(0, np.int32)
    dense = np.unpackbits(
        reach.view(np.uint8), axis=1, bitorder="little", count=n
    ).astype(bool)
    np.fill_diagonal(dense, False)
    out_u: list[np.ndarray] = []
    out_v: list[np.ndarray] = []
    block = 2048
    for s in range(0, n, block):
        e = min(n, s + block)
        both = dense[s:e] & dense[:, s:e].T
        uu, vv = np.nonzero(both)
        uu = uu + s
        keep = vv > uu
        out_u.append(uu[keep].astype(np.int32))
        out_v.append(vv[keep].astype(np.int32))
    return np.concatenate(out_u), np.concatenate(out_v)
