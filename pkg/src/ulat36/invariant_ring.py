"""Exact symbolic derivations for ternary self-dual codes of length 36
and the theta-series coefficient formulas for dimension-36 unimodular
lattices.

The complete-weight-enumerator work lives in the classical invariant ring
generated by a = x^3+y^3+z^3, p = 3xyz, b = x^3y^3+x^3z^3+y^3z^3 and the
derived generators of degrees 6, 12, 18, 36.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (AlphaOutOfRange, ConstraintViolated, NonUnique,
                     NoSolution, SolveFailed)
from .polynomials import TrivariatePoly, UnivariatePoly

CWE_LENGTH = 36


def ring_generators():
    """The invariant-ring generators used for length-36 ternary codes."""
    x = TrivariatePoly.variable(0)
    y = TrivariatePoly.variable(1)
    z = TrivariatePoly.variable(2)
    a = x ** 3 + y ** 3 + z ** 3
    p = (x * y * z).scale(3)
    b = (x * y) ** 3 + (x * z) ** 3 + (y * z) ** 3
    alpha12 = a * (a ** 3 + (p ** 3).scale(8))
    beta6 = a ** 2 - b.scale(12)
    gamma18 = a ** 6 - (a ** 3 * p ** 3).scale(20) - (p ** 6).scale(8)
    delta36 = p ** 3 * (a ** 3 - p ** 3) ** 3
    return {"a": a, "p": p, "b": b, "alpha12": alpha12, "beta6": beta6,
            "gamma18": gamma18, "delta36": delta36}


def _cwe_basis():
    g = ring_generators()
    a12, b6, c18, d36 = g["alpha12"], g["beta6"], g["gamma18"], g["delta36"]
    b12 = b6 ** 2
    return [
        d36,                # multiplied by a_1
        a12 ** 3,           # a_2
        a12 ** 2 * b12,     # a_3
        a12 * b12 ** 2,     # a_4
        b12 ** 3,           # a_5
        b6 * c18 * a12,     # a_6
        b6 * c18 * b12,     # a_7
    ]


@dataclass(frozen=True)
class CweFamily:
    """One-parameter family of degree-36 complete weight enumerators.

    a_1 is free; relations maps t in 2..7 to (c, d) with a_t = c + d*a_1.
    constant_part + a_1 * linear_part is the family polynomial.
    """

    relations: tuple
    constant_part: TrivariatePoly
    linear_part: TrivariatePoly

    def coefficient(self, key):
        """(c0, c1) with coefficient of the monomial equal to c0 + c1*a_1."""
        return self.constant_part.coeff(key), self.linear_part.coeff(key)

    def a_values(self, a1):
        a1 = Fraction(a1)
        return (a1,) + tuple(c + d * a1 for c, d in self.relations)

    def at(self, a1):
        a1 = Fraction(a1)
        return self.constant_part + self.linear_part.scale(a1)


def extremal_cwe_family() -> CweFamily:
    """Solve for the combination of invariant-ring basis elements whose
    monomials of Hamming weight below 12 all vanish (weight of x^i y^j z^l
    is 36 - i) with constant term 1; a_1 stays free, a_2..a_7 come out as
    affine functions of a_1."""
    basis = _cwe_basis()
    keys = sorted({k for poly in basis for k, _ in poly.terms})
    # unknowns a_2..a_7; right side carries (constant, a_1) columns
    rows = []
    for key in keys:
        i = key[0]
        weight = CWE_LENGTH - i
        if 0 < weight < 12:
            target = Fraction(0)
        elif weight == 0:
            target = Fraction(1)
        else:
            continue
        coeffs = [poly.coeff(key) for poly in basis]
        rows.append([coeffs[t] for t in range(1, 7)] + [target, -coeffs[0]])

    sol = _solve_affine(rows, 6)
    if sol is None:
        raise SolveFailed("weight constraints are inconsistent or underdetermined")
    relations = tuple(sol)
    constant = basis[0].scale(0)
    linear = basis[0]
    for t, (c, d) in enumerate(relations, start=1):
        constant = constant + basis[t].scale(c)
        linear = linear + basis[t].scale(d)
    return CweFamily(relations, constant, linear)


def _solve_affine(rows, nvars):
    """Solve rows [c_1..c_n | r0 r1] for unique x_i = u_i + v_i * a1."""
    work = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(nvars):
        piv = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[rank])]
        pivots.append(col)
        rank += 1
    if rank != nvars:
        return None
    for row in work[rank:]:
        if row[nvars] or row[nvars + 1]:
            return None
    out = [None] * nvars
    for r, col in enumerate(pivots):
        out[col] = (work[r][nvars], work[r][nvars + 1])
    return out


ADMISSIBLE_A1 = Fraction(-15180, 2916)


def admissible_cwe() -> TrivariatePoly:
    """The unique complete weight enumerator of the family once the
    y^15 z^21 monomial is forced to vanish (the admissibility constraint)."""
    family = extremal_cwe_family()
    poly = family.at(ADMISSIBLE_A1)
    if not (poly.is_integral() and poly.is_nonnegative()):
        raise SolveFailed("admissible enumerator is not a nonnegative integer polynomial")
    for (i, j, l), _ in poly.terms:
        if i == 0 and poly.coeff((0, j, l)) != poly.coeff((0, l, j)):
            raise SolveFailed("weight-36 stratum is not symmetric under y<->z")
    return poly


GLEASON_G4 = UnivariatePoly.from_dict({0: 1, 3: 8})
GLEASON_G12 = UnivariatePoly.from_dict({0: 1, 6: 264, 9: 440, 12: 24})


def gleason_ternary_we(n: int, min_weight: int, max_weight: int) -> UnivariatePoly:
    """Weight enumerator of a ternary self-dual code of length n pinned by
    Gleason's theorem plus the stated minimum and maximum weights."""
    if n % 4:
        raise ValueError("length must be divisible by 4")
    terms = [GLEASON_G4 ** ((n - 12 * j) // 4) * GLEASON_G12 ** j
             for j in range(n // 12 + 1)]
    nv = len(terms)
    eqs = []
    targets = [0]
    coeffs_rows = []
    coeffs_rows.append([t.coeff(0) for t in terms])
    targets[0] = Fraction(1)
    for e in range(1, min_weight):
        coeffs_rows.append([t.coeff(e) for t in terms])
        targets.append(Fraction(0))
    for e in range(max_weight + 1, n + 1):
        coeffs_rows.append([t.coeff(e) for t in terms])
        targets.append(Fraction(0))
    for row, tgt in zip(coeffs_rows, targets):
        eqs.append(row + [tgt])

    work = [list(r) for r in eqs]
    pivots = []
    rank = 0
    for col in range(nv):
        piv = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[rank])]
        pivots.append(col)
        rank += 1
    for row in work[rank:]:
        if row[nv]:
            raise NoSolution("weight constraints are infeasible")
    if rank < nv:
        raise NonUnique("solution space has positive dimension",
                        dimension=nv - rank)
    c = [None] * nv
    for r, col in enumerate(pivots):
        c[col] = work[r][nv]
    out = UnivariatePoly.from_dict({})
    for cj, t in zip(c, terms):
        out = out + t.scale(cj)
    return out


def extremal_theta36(alpha: int):
    """Leading theta and shadow-theta coefficients of an extremal
    (minimum-norm 4) unimodular lattice in dimension 36."""
    if not 0 <= alpha <= 16:
        raise AlphaOutOfRange(f"alpha = {alpha} outside [0, 16]")
    theta = {0: 1, 4: 42840 + 4096 * alpha, 5: 1916928 - 98304 * alpha}
    shadow = {1: alpha, 3: 960 - 60 * alpha, 5: 3799296 + 1734 * alpha}
    return theta, shadow


def min3_theta36(alpha: int, beta: int):
    """Leading theta and shadow-theta coefficients of a minimum-norm-3
    unimodular lattice in dimension 36."""
    if not (0 <= beta and 60 * beta <= alpha and alpha < 960):
        raise ConstraintViolated(
            f"(alpha, beta) = {(alpha, beta)} violates 0 <= beta <= alpha/60 < 16")
    theta = {0: 1, 3: 960 - alpha, 4: 42840 + 4096 * beta}
    shadow = {1: beta, 3: alpha - 60 * beta, 5: 3833856 - 36 * alpha + 1734 * beta}
    return theta, shadow


def extremal_bound(n: int) -> int:
    """Upper bound on the minimum norm of an n-dimensional unimodular lattice."""
    if n < 1:
        raise ValueError("dimension must be positive")
    if n == 23:
        return 3
    return 2 * (n // 24) + 2
