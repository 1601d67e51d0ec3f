"""Exact lattice representation and short-vector enumeration.

A Lattice is an integer basis matrix together with a positive integer
scale s; lattice vectors are integer row combinations divided by sqrt(s).
An "ambient vector" of a lattice always means a rational row w standing
for the point w / sqrt(scale).

Enumeration returns exact per-norm counts (norms are Fractions with
denominator dividing the scale) via a Fincke-Pohst tree with exact
integer leaf classification.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, isqrt

import numpy as np

from ._enum import _kernel, _kernel_bigint
from .errors import BudgetExceeded
from .intlinalg import (bareiss_det, gram_matrix, hnf, invert, lll_transform,
                        mat_mul, transpose)

DEFAULT_BUDGET = 10 ** 10
_COUNTS_LIMIT = 10 ** 7


def _factor_small(n, limit=10 ** 6):
    """Trial-division factorization; returns (factors dict, cofactor)."""
    n = abs(n)
    out = {}
    p = 2
    while p * p <= n and p <= limit:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    return out, n


def _simplify(rows, scale):
    """Divide out c from the rows and c^2 from the scale where possible."""
    g = 0
    for row in rows:
        for x in row:
            g = gcd(g, x)
    if g <= 1:
        return rows, scale
    factors, _ = _factor_small(gcd(g * g, scale))
    c = 1
    for p, _ in factors.items():
        vg = 0
        t = g
        while t % p == 0:
            vg += 1
            t //= p
        vs = 0
        t = scale
        while t % p == 0:
            vs += 1
            t //= p
        c *= p ** min(vg, vs // 2)
    if c > 1:
        rows = [[x // c for x in row] for row in rows]
        scale //= c * c
    return rows, scale


@dataclass(frozen=True)
class Lattice:
    """Rows of `basis` divided by sqrt(scale) generate the lattice."""

    basis: tuple
    scale: int

    @classmethod
    def of(cls, rows, scale):
        """Canonical form: HNF basis, minimal scale."""
        rows = [list(r) for r in rows]
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise ValueError("basis must be square")
        if scale <= 0:
            raise ValueError("scale must be positive")
        rows = hnf(rows)
        if len(rows) != m:
            raise ValueError("basis is singular")
        rows, scale = _simplify(rows, scale)
        return cls(tuple(tuple(r) for r in rows), scale)

    @classmethod
    def standard(cls, m):
        return cls.of([[int(i == j) for j in range(m)] for i in range(m)], 1)

    @property
    def dimension(self):
        return len(self.basis)

    @cached_property
    def det_basis(self):
        return bareiss_det([list(r) for r in self.basis])

    def canonical(self):
        return Lattice.of([list(r) for r in self.basis], self.scale)

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(f"{self.dimension} {self.scale}\n")
            for row in self.basis:
                fh.write(" ".join(map(str, row)) + "\n")

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            m, s = map(int, fh.readline().split())
            rows = [list(map(int, fh.readline().split())) for _ in range(m)]
        return cls.of(rows, s)


def gram(lat: Lattice):
    """Exact Gram matrix (basis . basis^T) / scale as Fraction rows."""
    g = gram_matrix([list(r) for r in lat.basis])
    return [[Fraction(x, lat.scale) for x in row] for row in g]


def dual(lat: Lattice) -> Lattice:
    """Dual lattice, expressed again as (integer basis, scale)."""
    inv = invert([list(r) for r in lat.basis])
    w = [[lat.scale * inv[j][i] for j in range(lat.dimension)]
         for i in range(lat.dimension)]
    den = 1
    for row in w:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    rows = [[int(x * den) for x in row] for row in w]
    return Lattice.of(rows, den * den * lat.scale)


def is_unimodular(lat: Lattice) -> bool:
    s, m = lat.scale, lat.dimension
    if lat.det_basis ** 2 != s ** m:
        return False
    g = gram_matrix([list(r) for r in lat.basis])
    return all(x % s == 0 for row in g for x in row)


@lru_cache(maxsize=None)
def _reduced(lat: Lattice):
    """LLL-reduced basis of `lat` plus the unimodular transform."""
    g = gram_matrix([list(r) for r in lat.basis])
    u = lll_transform(g)
    rows = mat_mul(u, [list(r) for r in lat.basis])
    return tuple(tuple(r) for r in rows), tuple(tuple(r) for r in u)


def reduce_basis(lat: Lattice) -> Lattice:
    """Same lattice with an LLL-reduced (delta = 0.99) basis."""
    rows, _ = _reduced(lat)
    return Lattice(rows, lat.scale)


@dataclass(frozen=True)
class ThetaPrefix:
    """Counts of vectors by exact norm, complete up to `bound`."""

    bound: Fraction
    counts: tuple  # sorted ((norm, count), ...)

    @classmethod
    def from_dict(cls, bound, d):
        items = tuple(sorted((Fraction(k), v) for k, v in d.items() if v))
        return cls(Fraction(bound), items)

    def as_dict(self):
        return dict(self.counts)

    def count_at(self, norm):
        norm = Fraction(norm)
        for k, v in self.counts:
            if k == norm:
                return v
        return 0

    def min_positive(self):
        for k, _ in self.counts:
            if k > 0:
                return k
        return None

    def kissing(self):
        k = self.min_positive()
        return self.count_at(k) if k is not None else 0

    def to_json_map(self):
        return {str(k): v for k, v in self.counts}

    @classmethod
    def from_json_map(cls, bound, m):
        return cls.from_dict(bound, {Fraction(k): v for k, v in m.items()})


def _int64_safe(qrows, rad2, rmin, cden, cnum_max, m):
    umax = cden * (math.sqrt(rad2) / rmin + 2.0) + cnum_max
    qmax = max(abs(x) for row in qrows for x in row)
    return m * m * qmax * umax * umax < 2 ** 61


def _run_enumeration(basis_rows, ilimit, cnum, cden, budget, halve, collect,
                     threads):
    """Shared driver: returns (counts dict keyed by scaled int norm,
    coefficient vectors, nodes)."""
    m = len(basis_rows)
    qrows = gram_matrix(basis_rows)
    rad2 = (ilimit + 0.5) / (cden * cden)
    q = np.array(qrows, dtype=np.int64)
    rfloat = np.linalg.cholesky(np.array(qrows, dtype=np.float64)).T.copy()
    cnum_arr = np.array(cnum, dtype=np.int64)
    cfloat = cnum_arr.astype(np.float64) / cden
    rmin = float(np.min(np.diag(rfloat)))
    if ilimit < 0:
        return {}, [], 0
    if ilimit > _COUNTS_LIMIT:
        raise ValueError(f"scaled norm bound {ilimit} too large to tabulate")

    cnum_max = int(np.max(np.abs(cnum_arr))) if m else 0
    if not _int64_safe(qrows, rad2, rmin, cden, cnum_max, m):
        counts, vecs, nodes, status = _kernel_bigint(
            rfloat.tolist(), qrows, list(cnum), cden,
            [float(x) for x in cfloat], ilimit, rad2,
            budget, halve, collect, -(2 ** 62), 2 ** 62)
        if status == 1:
            raise BudgetExceeded("enumeration node budget exhausted",
                                 nodes=nodes, budget=budget)
        return counts, vecs, nodes

    # root interval, for splitting across threads
    wroot = math.sqrt(rad2) / float(rfloat[m - 1, m - 1])
    groot = -float(cfloat[m - 1])
    root_lo = math.ceil(groot - wroot - 1e-7)
    root_hi = math.floor(groot + wroot + 1e-7)
    if halve:
        root_lo = max(root_lo, 0)
    nchunks = max(1, min(threads, root_hi - root_lo + 1))
    edges = np.linspace(root_lo, root_hi + 1, nchunks + 1).astype(np.int64)
    chunks = [(int(edges[i]), int(edges[i + 1]) - 1) for i in range(nchunks)
              if edges[i] <= edges[i + 1] - 1]

    def run(chunk):
        lo, hi = chunk
        cap = 1024 if collect else 0
        while True:
            vecs = np.empty((cap, m), dtype=np.int64)
            counts, nvec, nodes, status = _kernel(
                rfloat, q, cnum_arr, np.int64(cden), cfloat, np.int64(ilimit),
                rad2, np.int64(budget), halve, collect, vecs,
                np.int64(lo), np.int64(hi))
            if status == 2:
                cap = int(nvec) + 16
                continue
            return counts, vecs[:int(nvec)], int(nodes), int(status)

    if len(chunks) <= 1:
        results = [run(chunks[0])] if chunks else []
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            results = list(pool.map(run, chunks))

    total_counts = {}
    all_vecs = []
    total_nodes = 0
    for counts, vecs, nodes, status in results:
        if status == 1:
            raise BudgetExceeded("enumeration node budget exhausted",
                                 nodes=nodes, budget=budget)
        total_nodes += nodes
        nz = np.nonzero(counts)[0]
        for idx in nz:
            total_counts[int(idx)] = total_counts.get(int(idx), 0) + int(counts[idx])
        if collect:
            all_vecs.extend(vecs.tolist())
    if total_nodes > budget:
        raise BudgetExceeded("enumeration node budget exhausted",
                             nodes=total_nodes, budget=budget)
    return total_counts, all_vecs, total_nodes


def theta_prefix(lat: Lattice, bound, budget=None, threads=1) -> ThetaPrefix:
    """Exact counts of lattice vectors with norm <= bound, grouped by norm."""
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    budget = DEFAULT_BUDGET if budget is None else budget
    rows, _ = _reduced(lat)
    m = lat.dimension
    s = lat.scale
    ilimit = (bound * s).__floor__()
    counts, _, _ = _run_enumeration([list(r) for r in rows], int(ilimit),
                                    [0] * m, 1, budget, True, False, threads)
    d = {Fraction(n, s): 2 * c for n, c in counts.items()}
    d[Fraction(0)] = 1
    return ThetaPrefix.from_dict(bound, d)


def short_vectors(lat: Lattice, bound, budget=None, threads=1):
    """One ambient integer row per antipodal pair, for 0 < norm <= bound.

    Returns a list of (norm, row) sorted by (norm, row)."""
    bound = Fraction(bound)
    budget = DEFAULT_BUDGET if budget is None else budget
    rows, _ = _reduced(lat)
    m = lat.dimension
    s = lat.scale
    ilimit = (bound * s).__floor__()
    counts, coeffs, _ = _run_enumeration([list(r) for r in rows], int(ilimit),
                                         [0] * m, 1, budget, True, True, threads)
    basis = [list(r) for r in rows]
    out = []
    for c in coeffs:
        row = [sum(c[i] * basis[i][j] for i in range(m)) for j in range(m)]
        norm = Fraction(sum(x * x for x in row), s)
        if norm > 0:
            out.append((norm, row))
    out.sort()
    return out


def short_vectors_in_coset(lat: Lattice, t, bound, budget=None, threads=1,
                           collect=False):
    """Exact counts of vectors v in lat + t with norm <= bound.

    t is an ambient rational row of `lat` (i.e. the point t/sqrt(scale)).
    With collect=True also returns the ambient rational rows found.
    """
    bound = Fraction(bound)
    budget = DEFAULT_BUDGET if budget is None else budget
    rows, _ = _reduced(lat)
    m = lat.dimension
    s = lat.scale
    basis = [list(r) for r in rows]
    inv = invert(basis)
    coords = [sum(Fraction(t[i]) * inv[i][j] for i in range(m)) for j in range(m)]
    shift = [round(c) for c in coords]
    cfrac = [c - sh for c, sh in zip(coords, shift)]
    cden = 1
    for c in cfrac:
        cden = cden * c.denominator // gcd(cden, c.denominator)
    cnum = [int(c * cden) for c in cfrac]
    ilimit = (bound * s * cden * cden).__floor__()
    counts, coeffs, _ = _run_enumeration(basis, int(ilimit), cnum, cden,
                                         budget, False, collect, threads)
    den = s * cden * cden
    prefix = ThetaPrefix.from_dict(bound, {Fraction(n, den): c
                                           for n, c in counts.items()})
    if not collect:
        return prefix
    vecs = []
    for c in coeffs:
        num = [cden * ci + ni for ci, ni in zip(c, cnum)]
        vecs.append(tuple(Fraction(sum(num[i] * basis[i][j] for i in range(m)),
                                   cden) for j in range(m)))
    return prefix, vecs
