"""Unimodular lattices in dimension 36 from self-dual Z_k codes:
Construction A, theta/shadow/neighbor invariants, frame graphs, and the
exact weight-enumerator derivations."""

from .codes import (BinaryCodePair, Design, ZkCode, dual_code, euclidean_weight,
                    hamming_we, is_2_design, is_self_dual, macwilliams_dual_we,
                    min_euclidean_bounds, residue_torsion, solve_constrained_we,
                    weight_words_design)
from .polynomials import TrivariatePoly, UnivariatePoly

__all__ = [
    "BinaryCodePair", "Design", "TrivariatePoly", "UnivariatePoly", "ZkCode",
    "dual_code", "euclidean_weight", "hamming_we", "is_2_design",
    "is_self_dual", "macwilliams_dual_we", "min_euclidean_bounds",
    "residue_torsion", "solve_constrained_we", "weight_words_design",
]
