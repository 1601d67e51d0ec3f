"""Shared brute-force oracles: alternate routes to the same quantities,
kept deliberately independent of the library's enumeration path."""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from ulat36.intlinalg import invert


def brute_theta(basis, scale, bound, center=None):
    """Count vectors of (lattice + center) with norm <= bound by scanning
    an integer coefficient box; center is a rational coefficient vector."""
    m = len(basis)
    center = [Fraction(0)] * m if center is None else [Fraction(c) for c in center]
    inv = invert(basis)
    radius = math.sqrt(float(bound) * scale)
    ranges = []
    for i in range(m):
        col = math.sqrt(sum(float(inv[j][i]) ** 2 for j in range(m)))
        r = int(math.ceil(radius * col + float(abs(center[i])) + 1))
        ranges.append(range(-r, r + 1))
    counts = {}
    for coeffs in itertools.product(*ranges):
        vec = [sum((coeffs[i] + center[i]) * basis[i][j] for i in range(m))
               for j in range(m)]
        norm = Fraction(sum(x * x for x in vec), scale)
        if norm <= bound:
            counts[norm] = counts.get(norm, 0) + 1
    return counts


def brute_max_clique(adjacency, n):
    """Maximum clique size by exhaustive expansion (n <= 20)."""
    best = 0
    full = list(range(n))

    def grow(clique, candidates):
        nonlocal best
        best = max(best, len(clique))
        for idx, v in enumerate(candidates):
            if len(clique) + len(candidates) - idx <= best:
                return
            grow(clique + [v],
                 [u for u in candidates[idx + 1:] if adjacency[v] >> u & 1])

    grow([], full)
    return best


def random_lattice(rng: random.Random, dim, lo=-5, hi=5):
    """Random nonsingular integer basis with a random square-compatible scale."""
    from ulat36.intlinalg import bareiss_det

    while True:
        rows = [[rng.randint(lo, hi) for _ in range(dim)] for _ in range(dim)]
        if bareiss_det(rows) != 0:
            return rows


def random_code(rng: random.Random, k, n, nrows):
    from ulat36.codes import ZkCode

    rows = [[rng.randrange(k) for _ in range(n)] for _ in range(nrows)]
    return ZkCode.from_rows(k, n, rows)
