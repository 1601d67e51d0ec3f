"""Embedded expected values for self-checking reproduction runs.

These are the target outputs the derivations and table runs are compared
against; reproduction commands report PASS/FAIL by exact equality."""

from __future__ import annotations

from fractions import Fraction

from .polynomials import TrivariatePoly, UnivariatePoly

# unique weight enumerator of a doubly even [36,7] code with minimum
# weight 16 and dual distance at least 4
LEMMA1_WE = UnivariatePoly.from_dict({0: 1, 16: 63, 20: 63, 36: 1})

# the [36,8] variant
REMARK368_WE = UnivariatePoly.from_dict({0: 1, 16: 153, 20: 72, 24: 30})

# affine relations a_t = c + d * a_1 of the degree-36 CWE family
CWE_RELATIONS = (
    (Fraction(3281, 13824), Fraction(-1, 64)),
    (Fraction(203, 4608), Fraction(-9, 256)),
    (Fraction(1763, 13824), Fraction(3, 128)),
    (Fraction(-277, 13824), Fraction(-1, 256)),
    (Fraction(1133, 1728), Fraction(3, 64)),
    (Fraction(-77, 1728), Fraction(-1, 64)),
)

# the admissibility-constrained monomial: coefficient 15180 + 2916 a_1
CWE_FREE_MONOMIAL = (0, 15, 21)
CWE_FREE_COEFF = (Fraction(15180), Fraction(2916))

# the admissible complete weight enumerator, by orbit
_CWE_ORBITS = (
    (1, ((36, 0, 0), (0, 36, 0), (0, 0, 36))),
    (78706260, ((12, 12, 12),)),
    (682, ((18, 18, 0), (18, 0, 18), (0, 18, 18))),
    (7019232, ((6, 15, 15), (15, 15, 6), (15, 6, 15))),
    (29172, ((24, 6, 6), (6, 24, 6), (6, 6, 24))),
    (10260316, ((18, 9, 9), (9, 18, 9), (9, 9, 18))),
    (37995408, ((12, 15, 9), (12, 9, 15), (15, 12, 9),
                (15, 9, 12), (9, 12, 15), (9, 15, 12))),
    (3924756, ((12, 18, 6), (12, 6, 18), (18, 12, 6),
               (18, 6, 12), (6, 12, 18), (6, 18, 12))),
    (58344, ((12, 21, 3), (12, 3, 21), (21, 12, 3),
             (21, 3, 12), (3, 12, 21), (3, 21, 12))),
    (102, ((12, 24, 0), (12, 0, 24), (24, 12, 0),
           (24, 0, 12), (0, 12, 24), (0, 24, 12))),
    (170544, ((15, 18, 3), (15, 3, 18), (18, 15, 3),
              (18, 3, 15), (3, 15, 18), (3, 18, 15))),
    (641784, ((21, 6, 9), (21, 9, 6), (6, 21, 9),
              (6, 9, 21), (9, 21, 6), (9, 6, 21))),
    (6732, ((24, 3, 9), (24, 9, 3), (3, 24, 9),
            (3, 9, 24), (9, 24, 3), (9, 3, 24))),
)


def admissible_cwe_expected() -> TrivariatePoly:
    d = {}
    for coeff, keys in _CWE_ORBITS:
        for key in keys:
            assert key not in d
            d[key] = coeff
    return TrivariatePoly.from_dict(36, d)


# weight enumerator of a ternary self-dual [36] code with minimum weight 9
# and maximum weight 33
GLEASON_B_WE = UnivariatePoly.from_dict({
    0: 1, 9: 888, 12: 34848, 15: 1432224, 18: 18377688, 21: 90482256,
    24: 162551592, 27: 97883072, 30: 16178688, 33: 479232,
})

# theta coefficient formulas (base, per-alpha slope) for minimum-norm-4
# lattices in dimension 36, and (norm -> coefficient) shadow companions
EXTREMAL_THETA_FORMULA = {4: (42840, 4096), 5: (1916928, -98304)}
EXTREMAL_SHADOW_FORMULA = {1: (0, 1), 3: (960, -60), 5: (3799296, 1734)}

# minimum-norm-3 family: theta in (base, alpha, beta) slopes
MIN3_THETA_FORMULA = {3: (960, -1, 0), 4: (42840, 0, 4096)}
MIN3_SHADOW_FORMULA = {1: (0, 0, 1), 3: (0, 1, -60), 5: (3833856, -36, 1734)}

# invariants of the lattice pair attached to a code meeting the extremal
# admissible condition: kissing 72 for the code lattice, neighbor norm-3
# counts {72, 888} for its even-neighbor
CONDITION_A_KISSING = 72
CONDITION_A_NCOUNTS = (72, 888)

# long-shadow lattices: 480 norm-3 pairs, 368-regular graph, max clique 12
FRAME_VERTICES = 480
FRAME_VALENCY = 368
FRAME_MAX_CLIQUE = 12
