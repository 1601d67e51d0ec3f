"""Iterative branch-and-bound maximum-clique kernel over uint64 bitset
words, mirroring the recursive search in frames.py; numba-compiled when
available."""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def deco(f):
            return f

        return deco

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True, nogil=True, inline="always")
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True, nogil=True)
def _greedy_color(cand_row, radj, nwords, verts_row, bounds_row, scratch, avail):
    """Color the candidate set greedily; fills verts/bounds in increasing
    color order and returns the number of candidates."""
    cnt = 0
    color = 0
    for w in range(nwords):
        scratch[w] = cand_row[w]
    while True:
        nonzero = False
        for w in range(nwords):
            if scratch[w]:
                nonzero = True
                break
        if not nonzero:
            return cnt
        color += 1
        for w in range(nwords):
            avail[w] = scratch[w]
        while True:
            vw = -1
            for w in range(nwords):
                if avail[w]:
                    vw = w
                    break
            if vw < 0:
                break
            b = avail[vw] & (np.uint64(0) - avail[vw])
            v = (vw << 6) + _popcount(b - np.uint64(1))
            avail[vw] ^= b
            scratch[vw] ^= b
            for w in range(nwords):
                avail[w] &= ~radj[v, w]
            verts_row[cnt] = v
            bounds_row[cnt] = color
            cnt += 1


@njit(cache=True, nogil=True)
def _clique_kernel(radj, n, nwords, stop_at, floor):
    """Returns (best_size, witness buffer, exact_flag)."""
    cand = np.zeros((n + 2, nwords), dtype=np.uint64)
    verts = np.zeros((n + 1, n), dtype=np.int32)
    bounds = np.zeros((n + 1, n), dtype=np.int32)
    idx = np.full(n + 1, -1, dtype=np.int32)
    chosen = np.zeros(n + 1, dtype=np.int32)
    best_set = np.zeros(n, dtype=np.int32)
    scratch = np.zeros(nwords, dtype=np.uint64)
    avail = np.zeros(nwords, dtype=np.uint64)

    for v in range(n):
        cand[0, v >> 6] |= np.uint64(1) << np.uint64(v & 63)

    best = floor
    exact = True
    d = 0
    idx[0] = _greedy_color(cand[0], radj, nwords, verts[0], bounds[0],
                           scratch, avail) - 1

    while d >= 0:
        descended = False
        while idx[d] >= 0:
            i = idx[d]
            if d + bounds[d, i] <= best:
                idx[d] = -1
                break
            v = verts[d, i]
            idx[d] = i - 1
            chosen[d] = v
            cand[d, v >> 6] &= ~(np.uint64(1) << np.uint64(v & 63))
            empty = True
            for w in range(nwords):
                cw = cand[d, w] & radj[v, w]
                cand[d + 1, w] = cw
                if cw:
                    empty = False
            if empty:
                if d + 1 > best:
                    best = d + 1
                    for t in range(d + 1):
                        best_set[t] = chosen[t]
                    if stop_at > 0 and best >= stop_at:
                        exact = False
                        return best, best_set, exact
            else:
                d += 1
                idx[d] = _greedy_color(cand[d], radj, nwords, verts[d],
                                       bounds[d], scratch, avail) - 1
                descended = True
                break
        if not descended:
            d -= 1
    return best, best_set, exact


def max_clique_words(adjacency_masks, n, stop_at=None, floor=0):
    """Driver: adjacency as Python-int bitmasks -> (size, witness, exact)."""
    nwords = max(1, (n + 63) >> 6)
    radj = np.zeros((n, nwords), dtype=np.uint64)
    mask64 = (1 << 64) - 1
    for v in range(n):
        m = adjacency_masks[v]
        w = 0
        while m:
            radj[v, w] = np.uint64(m & mask64)
            m >>= 64
            w += 1
    best, best_set, exact = _clique_kernel(radj, n, nwords,
                                           0 if stop_at is None else stop_at,
                                           floor)
    if best == floor:
        return int(best), (), bool(exact)
    return int(best), tuple(sorted(int(x) for x in best_set[:best])), bool(exact)
