"""Even sublattice, shadow decomposition, unimodular neighbors, and the
derived invariants (alpha, norm-3 neighbor counts, long-shadow extraction).

Ambient vectors follow the Lattice convention: a rational row w of a
lattice with scale s stands for the point w / sqrt(s). Helpers convert
rows between related lattices whose scales differ by a square factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .errors import BudgetExceeded, DimensionNotDivisibleBy4, NotOdd
from .intlinalg import gram_matrix, hnf, invert
from .lattice import (Lattice, ThetaPrefix, dual, gram, is_unimodular,
                      reduce_basis, short_vectors_in_coset, theta_prefix)

_REP_SHORTEN_BOUND = 3


def _sqrt_fraction(f: Fraction) -> Fraction:
    num, den = isqrt(f.numerator), isqrt(f.denominator)
    if num * num != f.numerator or den * den != f.denominator:
        raise ValueError(f"scale ratio {f} is not a perfect square")
    return Fraction(num, den)


def convert_row(row, from_scale, to_scale):
    """Re-express an ambient row given over sqrt(from_scale) over
    sqrt(to_scale); the scales must differ by a square rational factor."""
    r = _sqrt_fraction(Fraction(to_scale, from_scale))
    return tuple(Fraction(x) * r for x in row)


def coords_in(lat: Lattice, row, row_scale):
    """Exact basis coordinates of an ambient row (over sqrt(row_scale))
    with respect to lat's basis."""
    w = convert_row(row, row_scale, lat.scale)
    inv = invert([list(r) for r in lat.basis])
    m = lat.dimension
    return [sum(w[i] * inv[i][j] for i in range(m)) for j in range(m)]


def contains_point(lat: Lattice, row, row_scale) -> bool:
    return all(c.denominator == 1 for c in coords_in(lat, row, row_scale))


def ambient_norm(row, scale) -> Fraction:
    return Fraction(sum(Fraction(x) ** 2 for x in row), scale)


def even_sublattice(lat: Lattice) -> Lattice:
    """Kernel of x -> (x,x) mod 2; index 2 in an odd integral lattice."""
    g = gram(lat)
    if any(x.denominator != 1 for rowg in g for x in rowg):
        raise ValueError("even sublattice needs an integral Gram matrix")
    parities = [int(g[i][i]) % 2 for i in range(lat.dimension)]
    if not any(parities):
        raise NotOdd("every basis vector has even norm")
    j = parities.index(1)
    rows = []
    basis = [list(r) for r in lat.basis]
    for i, p in enumerate(parities):
        if i == j:
            rows.append([2 * x for x in basis[j]])
        elif p == 0:
            rows.append(basis[i])
        else:
            rows.append([a + b for a, b in zip(basis[i], basis[j])])
    return Lattice.of(rows, lat.scale)


@dataclass(frozen=True)
class ShadowDecomposition:
    """L0 together with the three nontrivial cosets of L0 in L0*.

    coset_reps are ambient rational rows of even_part; exactly one of
    them (in_lattice_index) lies in the source lattice, the other two
    cosets make up the shadow."""

    even_part: Lattice
    coset_reps: tuple
    in_lattice_index: int

    def shadow_reps(self):
        return tuple(rep for i, rep in enumerate(self.coset_reps)
                     if i != self.in_lattice_index)

    def in_lattice_rep(self):
        return self.coset_reps[self.in_lattice_index]


def _shorten_rep(l0: Lattice, rep):
    """Babai-round the rep against the reduced basis, then take the
    smallest coset vector found by a cheap bounded enumeration (the rep
    choice never affects correctness, only size)."""
    red = reduce_basis(l0)
    basis = [list(r) for r in red.basis]
    inv = invert(basis)
    m = l0.dimension
    coords = [sum(Fraction(rep[i]) * inv[i][j] for i in range(m)) for j in range(m)]
    frac = [c - round(c) for c in coords]
    rep = tuple(sum(frac[i] * basis[i][j] for i in range(m)) for j in range(m))
    cap = min(Fraction(_REP_SHORTEN_BOUND), ambient_norm(rep, l0.scale))
    for bound in range(1, int(cap) + 1):
        try:
            _, vecs = short_vectors_in_coset(l0, rep, bound, budget=3 * 10 ** 7,
                                             collect=True)
        except BudgetExceeded:
            break
        if vecs:
            best = min(vecs, key=lambda v: (ambient_norm(v, l0.scale), v))
            return tuple(best)
    return rep


@lru_cache(maxsize=None)
def shadow(lat: Lattice) -> ShadowDecomposition:
    """Decompose L0* into L0 and its three nontrivial cosets."""
    l0 = even_sublattice(lat)
    l0s = dual(l0)
    m = lat.dimension
    # coordinates of L0's basis inside L0*
    y = []
    for row in l0.basis:
        c = coords_in(l0s, row, l0.scale)
        if any(x.denominator != 1 for x in c):
            raise AssertionError("even sublattice does not embed in its dual")
        y.append([int(x) for x in c])
    h = hnf(y)
    index = 1
    for i in range(m):
        index *= h[i][i]
    if index != 4:
        raise AssertionError(f"|L0* : L0| = {index}, expected 4")
    reps = []
    stack = [[]]
    for i in range(m):
        stack = [prefix + [v] for prefix in stack for v in range(h[i][i])]
    basis_s = [list(r) for r in l0s.basis]
    for c in stack:
        if not any(c):
            continue
        row = [sum(c[i] * basis_s[i][j] for i in range(m)) for j in range(m)]
        rep = convert_row(row, l0s.scale, l0.scale)
        reps.append(_shorten_rep(l0, rep))
    if len(reps) != 3:
        raise AssertionError("expected exactly 3 nontrivial cosets")
    reps.sort(key=lambda r: (ambient_norm(r, l0.scale), r))
    in_idx = [i for i, rep in enumerate(reps)
              if contains_point(lat, rep, l0.scale)]
    if len(in_idx) != 1:
        raise AssertionError("exactly one coset must lie in the lattice")
    return ShadowDecomposition(l0, tuple(reps), in_idx[0])


def neighbors(lat: Lattice):
    """The two unimodular lattices L0 + (shadow coset), as an unordered pair."""
    if lat.dimension % 4:
        raise DimensionNotDivisibleBy4(
            f"dimension {lat.dimension} is not divisible by 4")
    sd = shadow(lat)
    return tuple(_overlattice(sd.even_part, rep) for rep in sd.shadow_reps())


def _overlattice(l0: Lattice, rep) -> Lattice:
    den = 1
    for x in rep:
        den = den * x.denominator // gcd(den, x.denominator)
    rows = [[den * x for x in row] for row in l0.basis]
    rows.append([int(x * den) for x in rep])
    out = Lattice.of(hnf(rows), den * den * l0.scale)
    if not is_unimodular(out):
        raise AssertionError("neighbor is not unimodular")
    return out


def n_counts(lat: Lattice, budget=None, threads=1):
    """Sorted pair: the number of norm-3 vectors in each neighbor."""
    if lat.dimension % 4:
        raise DimensionNotDivisibleBy4(
            f"dimension {lat.dimension} is not divisible by 4")
    sd = shadow(lat)
    base = theta_prefix(sd.even_part, 3, budget=budget, threads=threads).count_at(3)
    out = []
    for rep in sd.shadow_reps():
        c = short_vectors_in_coset(sd.even_part, rep, 3, budget=budget,
                                   threads=threads)
        out.append(base + c.count_at(3))
    return tuple(sorted(out))


@dataclass(frozen=True)
class LatticeReport:
    """Invariants of an odd unimodular lattice, probed exactly."""

    min_norm: Fraction
    kissing: int
    alpha: int
    shadow_min: object  # Fraction or None within the probed bound
    shadow_probe_bound: Fraction
    n_counts: tuple
    theta: ThetaPrefix

    def to_json_dict(self):
        return {
            "min_norm": _frac_json(self.min_norm),
            "kissing": self.kissing,
            "alpha": self.alpha,
            "shadow_min": _frac_json(self.shadow_min),
            "shadow_probe_bound": _frac_json(self.shadow_probe_bound),
            "n_counts": list(self.n_counts),
        }


def _frac_json(x):
    if x is None:
        return None
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def analyze(lat: Lattice, bound=4, shadow_bound=3, budget=None, threads=1,
            progress=None) -> LatticeReport:
    """Compute min norm, kissing number, shadow alpha / minimum, and the
    neighbor norm-3 counts of an odd unimodular lattice."""

    def report(msg):
        if progress:
            progress(msg)

    tp = theta_prefix(lat, bound, budget=budget, threads=threads)
    report(f"theta prefix up to {bound} done")
    sd = shadow(lat)
    base = theta_prefix(sd.even_part, min(Fraction(shadow_bound), Fraction(3)),
                        budget=budget, threads=threads)
    report("even sublattice theta done")
    coset_prefixes = []
    for i, rep in enumerate(sd.shadow_reps()):
        coset_prefixes.append(short_vectors_in_coset(
            sd.even_part, rep, shadow_bound, budget=budget, threads=threads))
        report(f"shadow coset {i + 1}/2 done")
    alpha = sum(c.count_at(1) for c in coset_prefixes)
    mins = [c.min_positive() for c in coset_prefixes]
    mins = [x for x in mins if x is not None]
    shadow_min = min(mins) if mins else None
    counts3 = tuple(sorted(base.count_at(3) + c.count_at(3)
                           for c in coset_prefixes))
    return LatticeReport(
        min_norm=tp.min_positive(),
        kissing=tp.kissing(),
        alpha=alpha,
        shadow_min=shadow_min,
        shadow_probe_bound=Fraction(shadow_bound),
        n_counts=counts3,
        theta=tp,
    )


def long_shadow_extract(lat: Lattice, budget=None, threads=1):
    """The minimum-norm-3 neighbor of an extremal dimension-36 lattice
    with neighbor norm-3 counts {0, 960}; None when inapplicable."""
    if lat.dimension != 36 or not is_unimodular(lat):
        return None
    tp = theta_prefix(lat, 4, budget=budget, threads=threads)
    if tp.min_positive() != 4:
        return None
    sd = shadow(lat)
    base = theta_prefix(sd.even_part, 3, budget=budget, threads=threads).count_at(3)
    counts = []
    for rep in sd.shadow_reps():
        c = short_vectors_in_coset(sd.even_part, rep, 3, budget=budget,
                                   threads=threads)
        counts.append(base + c.count_at(3))
    if sorted(counts) != [0, 960]:
        return None
    rep = sd.shadow_reps()[counts.index(960)]
    neighbor = _overlattice(sd.even_part, rep)
    ntp = theta_prefix(neighbor, 3, budget=budget, threads=threads)
    if ntp.min_positive() != 3 or ntp.kissing() != 960:
        raise AssertionError("extracted neighbor fails its theta check")
    nsd = shadow(neighbor)
    for nrep in nsd.shadow_reps():
        c = short_vectors_in_coset(nsd.even_part, nrep, 3, budget=budget,
                                   threads=threads)
        if c.counts:
            raise AssertionError("extracted neighbor has a short shadow vector")
    return neighbor
