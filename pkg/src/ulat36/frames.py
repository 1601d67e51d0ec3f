"""Norm-3 antipodal-pair graphs and the clique search deciding whether a
unimodular lattice contains n pairwise orthogonal norm-3 vectors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._clique import HAVE_NUMBA, max_clique_words
from .lattice import Lattice, short_vectors


@dataclass(frozen=True)
class FrameGraph:
    """Vertices are antipodal pairs {x, -x} of norm-3 vectors; edges join
    orthogonal pairs. vertex_vectors holds the lexicographically positive
    representative of each pair as an ambient integer row."""

    vertex_count: int
    adjacency: tuple  # per-vertex neighbor bitmask
    vertex_vectors: tuple
    scale: int

    def degree(self, v):
        return self.adjacency[v].bit_count()

    def is_regular(self):
        degs = {self.degree(v) for v in range(self.vertex_count)}
        return len(degs) <= 1

    def valency(self):
        return self.degree(0) if self.vertex_count else 0

    def write_adjacency(self, fh):
        for v in range(self.vertex_count):
            mask = self.adjacency[v]
            nbrs = []
            while mask:
                b = mask & -mask
                nbrs.append(b.bit_length() - 1)
                mask ^= b
            fh.write(" ".join(map(str, nbrs)) + "\n")


def frame_graph(lat: Lattice, budget=None, threads=1) -> FrameGraph:
    vecs = short_vectors(lat, 3, budget=budget, threads=threads)
    reps = []
    for norm, row in vecs:
        if norm != 3:
            continue
        for x in row:
            if x:
                if x < 0:
                    row = [-y for y in row]
                break
        reps.append(tuple(row))
    reps.sort()
    n = len(reps)
    adjacency = [0] * n
    if n:
        v = np.array(reps, dtype=np.int64)
        prod = v @ v.T
        for i in range(n):
            mask = 0
            for j in np.nonzero(prod[i] == 0)[0]:
                if j != i:
                    mask |= 1 << int(j)
            adjacency[i] = mask
    return FrameGraph(n, tuple(adjacency), tuple(reps), lat.scale)


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: tuple  # vertex indices
    exact: bool  # False when the search stopped early at stop_at


def _degeneracy_order(adjacency, n):
    remaining = (1 << n) - 1
    order = []
    degs = [adjacency[v].bit_count() for v in range(n)]
    for _ in range(n):
        best, bestdeg = -1, None
        mask = remaining
        while mask:
            b = mask & -mask
            v = b.bit_length() - 1
            mask ^= b
            if bestdeg is None or degs[v] < bestdeg:
                best, bestdeg = v, degs[v]
        order.append(best)
        remaining ^= 1 << best
        nb = adjacency[best] & remaining
        while nb:
            b = nb & -nb
            degs[b.bit_length() - 1] -= 1
            nb ^= b
    return order


class _Found(Exception):
    pass


def _search_python(radj, n, stop_at, floor=0):
    """Recursive reference search over Python-int bitsets."""
    best = floor
    best_set = ()
    stack = []

    def expand(p):
        nonlocal best, best_set
        unc = p
        verts = []
        bounds = []
        color = 0
        while unc:
            color += 1
            avail = unc
            while avail:
                b = avail & -avail
                v = b.bit_length() - 1
                avail &= ~radj[v] & ~b
                unc &= ~b
                verts.append(v)
                bounds.append(color)
        for i in range(len(verts) - 1, -1, -1):
            if len(stack) + bounds[i] <= best:
                return
            v = verts[i]
            stack.append(v)
            child = p & radj[v]
            if child:
                expand(child)
            elif len(stack) > best:
                best = len(stack)
                best_set = tuple(stack)
                if stop_at is not None and best >= stop_at:
                    raise _Found
            stack.pop()
            p &= ~(1 << v)

    exact = True
    try:
        expand((1 << n) - 1)
    except _Found:
        exact = False
    return best, best_set, exact


def max_clique(graph: FrameGraph, stop_at=None, floor=0) -> CliqueResult:
    """Exact maximum clique by branch and bound with a greedy coloring
    bound over bitset candidate sets; with stop_at, may stop early once a
    clique of that size is found (result flagged exact=False).

    floor > 0 turns the search into a decision procedure: only cliques
    larger than floor are looked for, and when none exists the result is
    (floor, empty witness, exact=True) meaning "no clique above floor"."""
    n = graph.vertex_count
    if n == 0:
        return CliqueResult(0, (), True)
    order = _degeneracy_order(list(graph.adjacency), n)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    radj = [0] * n
    for v in range(n):
        mask, m2 = graph.adjacency[v], 0
        while mask:
            b = mask & -mask
            m2 |= 1 << pos[b.bit_length() - 1]
            mask ^= b
        radj[pos[v]] = m2

    if n > 64 and HAVE_NUMBA:
        best, best_set, exact = max_clique_words(radj, n, stop_at, floor)
    else:
        best, best_set, exact = _search_python(radj, n, stop_at, floor)
    witness = tuple(sorted(order[v] for v in best_set))
    for i, a in enumerate(witness):
        for b in witness[i + 1:]:
            assert graph.adjacency[a] >> b & 1, "clique witness failed re-check"
    return CliqueResult(best, witness, exact)


def has_3_frame(lat: Lattice, budget=None, threads=1) -> bool:
    """True iff the lattice contains dimension-many pairwise orthogonal
    norm-3 vectors (witness re-verified by exact inner products)."""
    n = lat.dimension
    graph = frame_graph(lat, budget=budget, threads=threads)
    if graph.vertex_count < n:
        return False
    result = max_clique(graph, stop_at=n, floor=n - 1)
    if result.size < n or not result.witness:
        return False
    vecs = [graph.vertex_vectors[v] for v in result.witness]
    for i, a in enumerate(vecs):
        assert sum(x * x for x in a) == 3 * graph.scale
        for b in vecs[i + 1:]:
            assert sum(x * y for x, y in zip(a, b)) == 0
    return True
