"""Jitted kernel implementations.

Twin of :mod:`cliquetools._kernels.numpy_backend` with identical semantics,
compiled with numba. Keep the two files in lockstep: the equivalence tests
compare results and step counts between backends. ``nogil=True`` lets the
clique search run root subtrees from a thread pool and lets a watchdog
thread flip the stop flag mid-kernel.
"""

from __future__ import annotations

import numpy as np
from numba import njit

STATUS_DONE = 0
STATUS_UB = 1
STATUS_STOP = 2

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_ONE = np.uint64(1)
_ALL = np.uint64(0xFFFFFFFFFFFFFFFF)


@njit(cache=True, inline="always")
def _popcnt(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True, inline="always")
def _row_popcount(row):
    total = np.int64(0)
    for w in range(row.shape[0]):
        total += _popcnt(row[w])
    return total


@njit(cache=True, inline="always")
def _first_bit(row):
    for w in range(row.shape[0]):
        word = row[w]
        if word != np.uint64(0):
            lsb = word & (~word + _ONE)
            return (w << 6) + _popcnt(lsb - _ONE)
    return -1


@njit(cache=True)
def _fill_full_mask(row, nv):
    full = nv >> 6
    rem = nv & 63
    for w in range(full):
        row[w] = _ALL
    if rem:
        row[full] = _ALL >> np.uint64(64 - rem)


@njit(cache=True, nogil=True)
def triangle_counts(indptr, indices, n):
    t = np.zeros(n, dtype=np.int64)
    for u in range(n):
        su, eu = indptr[u], indptr[u + 1]
        for k in range(su, eu):
            v = indices[k]
            if v <= u:
                continue
            i = su
            j = indptr[v]
            ev = indptr[v + 1]
            while i < eu and j < ev:
                a = indices[i]
                b = indices[j]
                if a == b:
                    t[a] += 1
                    i += 1
                    j += 1
                elif a < b:
                    i += 1
                else:
                    j += 1
    return t


@njit(cache=True, nogil=True)
def core_peel(indptr, indices, n):
    deg = np.zeros(n, dtype=np.int64)
    core = np.zeros(n, dtype=np.int32)
    order = np.zeros(n, dtype=np.int32)
    if n == 0:
        return core, order
    maxdeg = 0
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
        if deg[v] > maxdeg:
            maxdeg = int(deg[v])
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
        if deg[v] > cur:
            cur = int(deg[v])
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


@njit(cache=True, nogil=True)
def greedy_cliques(indptr, indices, degs, starts, wit_out):
    n = len(indptr) - 1
    best_size = 0
    best_pos = -1
    steps = 0
    members = np.empty(n, dtype=np.int32)
    cand = np.empty(n, dtype=np.int32)
    nxt = np.empty(n, dtype=np.int32)
    for p in range(len(starts)):
        s = starts[p]
        members[0] = s
        msize = 1
        csize = 0
        for k in range(indptr[s], indptr[s + 1]):
            cand[csize] = indices[k]
            csize += 1
        while csize > 0:
            at = 0
            for i in range(1, csize):
                if degs[cand[i]] > degs[cand[at]]:
                    at = i
            u = cand[at]
            members[msize] = u
            msize += 1
            steps += 1
            i = 0
            j = indptr[u]
            eu = indptr[u + 1]
            nsize = 0
            while i < csize and j < eu:
                a = cand[i]
                b = indices[j]
                if a == b:
                    nxt[nsize] = a
                    nsize += 1
                    i += 1
                    j += 1
                elif a < b:
                    i += 1
                else:
                    j += 1
            for i in range(nsize):
                cand[i] = nxt[i]
            csize = nsize
        if msize > best_size:
            best_size = msize
            best_pos = p
            for i in range(msize):
                wit_out[i] = members[i]
    return best_size, best_pos, steps


@njit(cache=True, nogil=True)
def search_subtree(bits, start_bound, ub, shared_best, stop_flag, wit_out):
    nv, nw = bits.shape
    found = 0
    wit_len = 0
    steps = 0
    bound = start_bound
    if nv == 0:
        return found, wit_len, steps, STATUS_DONE
    stack = np.zeros((nv + 1, nw), dtype=np.uint64)
    _fill_full_mask(stack[0], nv)
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
                bound = shared_best[0]
        chosen[d] = j
        size = d + 2
        if size > bound:
            bound = size
            found = size
            wit_len = d + 1
            for i in range(wit_len):
                wit_out[i] = chosen[i]
            if bound >= ub:
                return found, wit_len, steps, STATUS_UB
        grow = 0
        for w in range(nw):
            word = stack[d, w] & bits[j, w]
            stack[d + 1, w] = word
            grow += _popcnt(word)
        if grow > 0 and size + grow > bound:
            d += 1
    return found, wit_len, steps, STATUS_DONE


@njit(cache=True, nogil=True)
def reach_sweep(n, nw, src, dst, batch_ptr):
    reach = np.zeros((n, nw), dtype=np.uint64)
    for v in range(n):
        reach[v, v >> 6] |= _ONE << np.uint64(v & 63)
    for b in range(len(batch_ptr) - 1):
        s = batch_ptr[b]
        e = batch_ptr[b + 1]
        snap = np.empty((e - s, nw), dtype=np.uint64)
        for k in range(s, e):
            row = dst[k]
            for w in range(nw):
                snap[k - s, w] = reach[row, w]
        for k in range(s, e):
            row = src[k]
            for w in range(nw):
                reach[row, w] |= snap[k - s, w]
    return reach


@njit(cache=True, nogil=True)
def mutual_pairs(reach):
    n, nw = reach.shape
    us = np.empty(0, dtype=np.int32)
    vs = np.empty(0, dtype=np.int32)
    count = 0
    for fill in range(2):
        if fill == 1:
            us = np.empty(count, dtype=np.int32)
            vs = np.empty(count, dtype=np.int32)
            count = 0
        for u in range(n):
            uw = u >> 6
            ubit = np.uint64(u & 63)
            for w in range(nw):
                word = reach[u, w]
                while word != np.uint64(0):
                    lsb = word & (~word + _ONE)
                    v = (w << 6) + _popcnt(lsb - _ONE)
                    word ^= lsb
                    if v >= n:  # padding bits in the last word
                        break
                    if v > u and ((reach[v, uw] >> ubit) & _ONE) != np.uint64(0):
                        if fill == 1:
                            us[count] = u
                            vs[count] = v
                        count += 1
    return us, vs
