import math
import random
from fractions import Fraction

import pytest

from conftest import random_code
from ulat36.codes import (ZkCode, check_constrained_we, dual_code,
                          euclidean_weight, hamming_we, is_2_design,
                          is_self_dual, macwilliams_dual_we,
                          min_euclidean_bounds, min_euclidean_weight,
                          residue_torsion, solve_constrained_we,
                          weight_words_design)
from ulat36.errors import (CardinalityTooLarge, NoSolution, NotSelfDual)
from ulat36.polynomials import UnivariatePoly

TETRACODE = ZkCode.from_rows(3, 4, [[1, 0, 1, 1], [0, 1, 1, 2]])


def brute_dual(code):
    from itertools import product

    k, n = code.modulus, code.length
    words = [w for w in product(range(k), repeat=n)
             if all(sum(a * b for a, b in zip(w, g)) % k == 0
                    for g in code.generators)]
    return ZkCode.from_rows(k, n, [list(w) for w in words])


class TestDualCode:
    def test_z4_two_self_dual(self):
        c = ZkCode.from_rows(4, 1, [[2]])
        assert dual_code(c) == c

    def test_binary_repetition_pair(self):
        c = ZkCode.from_rows(2, 2, [[1, 1]])
        assert dual_code(c) == c

    def test_tetracode_brute_force(self):
        assert dual_code(TETRACODE) == brute_dual(TETRACODE)

    def test_cardinality_product(self):
        rng = random.Random(21)
        for _ in range(15):
            k = rng.choice([2, 3, 4, 5, 6])
            code = random_code(rng, k, rng.randint(1, 4), rng.randint(0, 3))
            d = dual_code(code)
            assert code.cardinality * d.cardinality == k ** code.length
            assert d == brute_dual(code)

    def test_dual_of_zero_code(self):
        zero = ZkCode.from_rows(4, 3, [])
        assert dual_code(zero).cardinality == 4 ** 3


class TestIsSelfDual:
    def test_binary_unit_not(self):
        assert not is_self_dual(ZkCode.from_rows(2, 2, [[1, 0]]))

    def test_z4_diagonal(self):
        assert is_self_dual(ZkCode.from_rows(4, 2, [[2, 0], [0, 2]]))

    def test_tetracode(self):
        assert is_self_dual(TETRACODE)


class TestHammingWE:
    def test_binary_pair(self):
        assert hamming_we(ZkCode.from_rows(2, 2, [[1, 1]])) == \
            UnivariatePoly.from_dict({0: 1, 2: 1})

    def test_tetracode(self):
        assert hamming_we(TETRACODE) == UnivariatePoly.from_dict({0: 1, 3: 8})

    def test_guard(self):
        big = ZkCode.from_rows(2, 30, [[int(i == j) for j in range(30)]
                                       for i in range(30)])
        with pytest.raises(CardinalityTooLarge):
            hamming_we(big)


class TestMacWilliams:
    def test_self_dual_fixed_point(self):
        w = UnivariatePoly.from_dict({0: 1, 2: 1})
        assert macwilliams_dual_we(w, 2, 2, 2) == w

    def test_repetition_three(self):
        w = UnivariatePoly.from_dict({0: 1, 3: 1})
        assert macwilliams_dual_we(w, 3, 2, 2) == \
            UnivariatePoly.from_dict({0: 1, 2: 3})

    def test_lemma_dual_vanishing(self):
        w = UnivariatePoly.from_dict({0: 1, 16: 63, 20: 63, 36: 1})
        d = macwilliams_dual_we(w, 36, 128, 2)
        assert d.coeff(1) == d.coeff(2) == d.coeff(3) == 0
        assert d.coeff(0) == 1
        assert d.coefficient_sum() == 2 ** 29

    def test_involution_random_codes(self):
        rng = random.Random(22)
        for q in (2, 3):
            for _ in range(10):
                code = random_code(rng, q, rng.randint(1, 6), rng.randint(0, 3))
                w = hamming_we(code)
                d = macwilliams_dual_we(w, code.length, code.cardinality, q)
                dd = macwilliams_dual_we(d, code.length,
                                         q ** code.length // code.cardinality, q)
                assert dd == w

    def test_duality_with_enumeration(self):
        rng = random.Random(23)
        for q in (2, 3):
            for _ in range(8):
                code = random_code(rng, q, rng.randint(1, 5), rng.randint(1, 3))
                lhs = hamming_we(dual_code(code))
                rhs = macwilliams_dual_we(hamming_we(code), code.length,
                                          code.cardinality, q)
                assert lhs == rhs

    def test_self_dual_codes_fixed(self):
        for code in (TETRACODE, ZkCode.from_rows(2, 2, [[1, 1]])):
            w = hamming_we(code)
            assert macwilliams_dual_we(w, code.length, code.cardinality,
                                       code.modulus if code.modulus in (2, 3)
                                       else 2) == w


class TestResidueTorsion:
    def test_two_span(self):
        pair = residue_torsion(ZkCode.from_rows(4, 1, [[2]]))
        assert pair.residue.cardinality == 1
        assert pair.torsion.cardinality == 2

    def test_direct_enumeration_example(self):
        c = ZkCode.from_rows(4, 4, [[1, 1, 1, 1], [0, 2, 0, 2], [0, 0, 2, 2]])
        pair = residue_torsion(c)
        assert pair.residue == ZkCode.from_rows(2, 4, [[1, 1, 1, 1]])
        even = ZkCode.from_rows(2, 4, [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]])
        assert pair.torsion == even

    def test_torsion_matches_definition(self):
        rng = random.Random(24)
        for _ in range(12):
            code = random_code(rng, 4, rng.randint(1, 4), rng.randint(1, 3))
            pair = residue_torsion(code)
            n = code.length
            from itertools import product
            expect = [list(x) for x in product(range(2), repeat=n)
                      if code.contains([2 * v for v in x])]
            assert pair.torsion == ZkCode.from_rows(2, n, expect)

    def test_residue_subset_torsion_for_self_dual(self):
        c = ZkCode.from_rows(4, 4, [[1, 1, 1, 1], [0, 2, 0, 2], [0, 0, 2, 2]])
        pair = residue_torsion(c)
        for g in pair.residue.generators:
            assert pair.torsion.contains(list(g))
        assert pair.torsion == dual_code(pair.residue)


class TestEuclideanWeight:
    @pytest.mark.parametrize("vec,expect", [
        ((1, 2, 3, 0), 6),
        ((2, 2), 8),
        ((0, 0, 0), 0),
    ])
    def test_examples(self, vec, expect):
        assert euclidean_weight(vec) == expect

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            euclidean_weight([4])


class TestMinEuclideanBounds:
    def test_diagonal_code(self):
        c = ZkCode.from_rows(4, 2, [[2, 0], [0, 2]])
        assert min_euclidean_bounds(c) == (4, 4)
        assert min_euclidean_weight(c) == 4

    def test_requires_self_dual(self):
        with pytest.raises(NotSelfDual):
            min_euclidean_bounds(ZkCode.from_rows(4, 2, [[1, 0]]))

    def test_brute_force_within_bounds(self):
        # self-dual Z4 codes assembled from small self-dual blocks
        blocks = [
            ZkCode.from_rows(4, 1, [[2]]),
            ZkCode.from_rows(4, 4, [[1, 1, 1, 1], [0, 2, 0, 2], [0, 0, 2, 2]]),
        ]
        rng = random.Random(25)
        for _ in range(8):
            pieces = [rng.choice(blocks) for _ in range(rng.randint(1, 3))]
            n = sum(p.length for p in pieces)
            rows = []
            off = 0
            for p in pieces:
                for g in p.generators:
                    rows.append([0] * off + list(g) + [0] * (n - off - p.length))
                off += p.length
            code = ZkCode.from_rows(4, n, rows)
            assert is_self_dual(code)
            lo, hi = min_euclidean_bounds(code)
            de = min_euclidean_weight(code)
            assert lo <= de <= hi


class TestSolveConstrainedWE:
    def test_dim7(self):
        sols = solve_constrained_we(36, 7, 4, 16, 4, None)
        assert sols == [UnivariatePoly.from_dict({0: 1, 16: 63, 20: 63, 36: 1})]

    def test_dim8(self):
        sols = solve_constrained_we(36, 8, 4, 16, 4, None)
        assert sols == [UnivariatePoly.from_dict({0: 1, 16: 153, 20: 72, 24: 30})]

    def test_repetition(self):
        sols = solve_constrained_we(8, 1, 8, 8, 1, True)
        assert sols == [UnivariatePoly.from_dict({0: 1, 8: 1})]

    def test_round_trip_checker(self):
        for args in ((36, 7, 4, 16, 4), (36, 8, 4, 16, 4)):
            for sol in solve_constrained_we(*args, None):
                assert check_constrained_we(sol, *args, None)

    def test_infeasible(self):
        with pytest.raises(NoSolution):
            solve_constrained_we(8, 2, 8, 8, 5, None)


class TestDesigns:
    def test_extended_hamming(self):
        code = ZkCode.from_rows(2, 8, [
            [1, 1, 1, 1, 0, 0, 0, 0],
            [0, 0, 1, 1, 1, 1, 0, 0],
            [0, 0, 0, 0, 1, 1, 1, 1],
            [0, 1, 0, 1, 0, 1, 0, 1]])
        design = weight_words_design(code, 4)
        assert len(design.blocks) == 14
        assert is_2_design(design) == 3

    def test_zero_code(self):
        design = weight_words_design(ZkCode.from_rows(2, 5, []), 2)
        assert design.blocks == ()
        assert is_2_design(design) is None

    def test_not_a_design(self):
        code = ZkCode.from_rows(2, 4, [[1, 1, 0, 0]])
        design = weight_words_design(code, 2)
        assert is_2_design(design) is None
