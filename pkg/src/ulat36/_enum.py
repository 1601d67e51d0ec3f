"""Fincke-Pohst short-vector enumeration core.

The tree is driven by a float64 Cholesky factor of the (scaled, integral)
Gram matrix with a safety margin; every leaf is classified by an exact
integer evaluation of the quadratic form, so reported counts are exact.
Vectors are enumerated as integer coefficient vectors against the reduced
basis, optionally offset by a rational coset center cnum/cden.

Compiled with numba when available; the same function body runs (slowly)
as plain Python otherwise. A big-int mirror exists for the (never hit in
practice) case where int64 overflow bounds cannot be guaranteed.
"""

from __future__ import annotations

import math

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def deco(f):
            return f

        return deco


@njit(cache=True, nogil=True)
def _kernel(R, Q, cnum, cden, cfloat, ilimit, rad2, budget, halve, collect,
            vecs, root_lo, root_hi):
    m = R.shape[0]
    counts = np.zeros(ilimit + 1, dtype=np.int64)
    x = np.zeros(m, dtype=np.int64)
    hi = np.zeros(m, dtype=np.int64)
    part = np.zeros(m, dtype=np.float64)
    sufix = np.zeros(m, dtype=np.float64)
    srow = np.zeros(m, dtype=np.int64)
    tnorm = np.zeros(m, dtype=np.int64)
    zero_above = np.zeros(m, dtype=np.uint8)
    nodes = np.int64(0)
    nvec = np.int64(0)
    status = np.int64(0)
    cap = vecs.shape[0]

    i = m - 1
    zero_above[i] = 1
    w = math.sqrt(rad2) / R[i, i]
    gamma = -cfloat[i]
    l = np.int64(math.ceil(gamma - w - 1e-7))
    h = np.int64(math.floor(gamma + w + 1e-7))
    if halve and l < 0:
        l = 0
    if l < root_lo:
        l = root_lo
    if h > root_hi:
        h = root_hi
    hi[i] = h
    x[i] = l

    while True:
        if x[i] > hi[i]:
            i += 1
            if i >= m:
                break
            x[i] += 1
            continue
        nodes += 1
        if nodes > budget:
            status = 1
            break
        yi = x[i] + cfloat[i]
        val = R[i, i] * yi + sufix[i]
        npart = part[i] + val * val
        if npart > rad2 * (1.0 + 1e-12) + 1e-9:
            x[i] += 1
            continue
        if i == 0:
            u0 = cden * x[0] + cnum[0]
            nval = tnorm[0] + 2 * u0 * srow[0] + Q[0, 0] * u0 * u0
            if nval <= ilimit:
                if halve and zero_above[0] == 1 and x[0] == 0:
                    pass  # the zero vector is handled by the caller
                else:
                    counts[nval] += 1
                    if collect:
                        if nvec < cap:
                            for j in range(m):
                                vecs[nvec, j] = x[j]
                        else:
                            status = 2
                        nvec += 1
            x[0] += 1
            continue
        j = i - 1
        part[j] = npart
        zero_above[j] = 1 if (zero_above[i] == 1 and x[i] == 0) else 0
        ui = cden * x[i] + cnum[i]
        tnorm[j] = tnorm[i] + 2 * ui * srow[i] + Q[i, i] * ui * ui
        s_int = np.int64(0)
        s_f = 0.0
        for kk in range(j + 1, m):
            uk = cden * x[kk] + cnum[kk]
            s_int += Q[j, kk] * uk
            s_f += R[j, kk] * (x[kk] + cfloat[kk])
        srow[j] = s_int
        sufix[j] = s_f
        rem = rad2 - npart
        if rem < 0.0:
            rem = 0.0
        w = math.sqrt(rem) / R[j, j]
        gamma = -cfloat[j] - s_f / R[j, j]
        l = np.int64(math.ceil(gamma - w - 1e-7))
        h = np.int64(math.floor(gamma + w + 1e-7))
        if halve and zero_above[j] == 1 and l < 0:
            l = 0
        hi[j] = h
        x[j] = l
        i = j

    return counts, nvec, nodes, status


def _kernel_bigint(Rrows, Qrows, cnum, cden, cfloat, ilimit, rad2, budget,
                   halve, collect, root_lo, root_hi):
    """Python-int mirror of _kernel for magnitudes unsafe for int64."""
    m = len(Rrows)
    counts = {}
    vecs = []
    x = [0] * m
    hi = [0] * m
    part = [0.0] * m
    sufix = [0.0] * m
    srow = [0] * m
    tnorm = [0] * m
    zero_above = [0] * m
    nodes = 0
    status = 0

    i = m - 1
    zero_above[i] = 1
    w = math.sqrt(rad2) / Rrows[i][i]
    gamma = -cfloat[i]
    l = math.ceil(gamma - w - 1e-7)
    h = math.floor(gamma + w + 1e-7)
    if halve and l < 0:
        l = 0
    l = max(l, root_lo)
    h = min(h, root_hi)
    hi[i] = h
    x[i] = l

    while True:
        if x[i] > hi[i]:
            i += 1
            if i >= m:
                break
            x[i] += 1
            continue
        nodes += 1
        if nodes > budget:
            status = 1
            break
        yi = x[i] + cfloat[i]
        val = Rrows[i][i] * yi + sufix[i]
        npart = part[i] + val * val
        if npart > rad2 * (1.0 + 1e-12) + 1e-9:
            x[i] += 1
            continue
        if i == 0:
            u0 = cden * x[0] + cnum[0]
            nval = tnorm[0] + 2 * u0 * srow[0] + Qrows[0][0] * u0 * u0
            if nval <= ilimit and not (halve and zero_above[0] and x[0] == 0):
                counts[nval] = counts.get(nval, 0) + 1
                if collect:
                    vecs.append(list(x))
            x[0] += 1
            continue
        j = i - 1
        part[j] = npart
        zero_above[j] = 1 if (zero_above[i] and x[i] == 0) else 0
        ui = cden * x[i] + cnum[i]
        tnorm[j] = tnorm[i] + 2 * ui * srow[i] + Qrows[i][i] * ui * ui
        s_int = 0
        s_f = 0.0
        for kk in range(j + 1, m):
            uk = cden * x[kk] + cnum[kk]
            s_int += Qrows[j][kk] * uk
            s_f += Rrows[j][kk] * (x[kk] + cfloat[kk])
        srow[j] = s_int
        sufix[j] = s_f
        rem = max(rad2 - npart, 0.0)
        w = math.sqrt(rem) / Rrows[j][j]
        gamma = -cfloat[j] - s_f / Rrows[j][j]
        l = math.ceil(gamma - w - 1e-7)
        h = math.floor(gamma + w + 1e-7)
        if halve and zero_above[j] and l < 0:
            l = 0
        hi[j] = h
        x[j] = l
        i = j

    return counts, vecs, nodes, status
