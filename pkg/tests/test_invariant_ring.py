from fractions import Fraction

import pytest

from ulat36 import expected
from ulat36.errors import (AlphaOutOfRange, ConstraintViolated, NonUnique,
                           NoSolution)
from ulat36.invariant_ring import (ADMISSIBLE_A1, admissible_cwe,
                                   extremal_bound, extremal_cwe_family,
                                   extremal_theta36, gleason_ternary_we,
                                   min3_theta36, ring_generators)
from ulat36.polynomials import UnivariatePoly


def _eval(p, x, y, z):
    return sum(v * Fraction(x) ** i * Fraction(y) ** j * Fraction(z) ** l
               for (i, j, l), v in p.terms)


class TestRingGenerators:
    def test_point_values(self):
        g = ring_generators()
        assert _eval(g["beta6"], 1, 0, 0) == 1
        assert _eval(g["p"], 1, 1, 1) == 3
        assert g["delta36"].degree == 36

    def test_degrees(self):
        g = ring_generators()
        for name, deg in (("a", 3), ("p", 3), ("b", 6), ("alpha12", 12),
                          ("beta6", 6), ("gamma18", 18), ("delta36", 36)):
            assert g[name].degree == deg


class TestCweFamily:
    def test_relations(self):
        family = extremal_cwe_family()
        assert family.relations == expected.CWE_RELATIONS

    def test_free_monomial_coefficient(self):
        family = extremal_cwe_family()
        assert family.coefficient(expected.CWE_FREE_MONOMIAL) == \
            expected.CWE_FREE_COEFF

    def test_low_weight_monomials_vanish(self):
        family = extremal_cwe_family()
        for poly in (family.constant_part, family.linear_part):
            for (i, j, l), coeff in poly.terms:
                weight = 36 - i
                assert not (0 < weight < 12), ((i, j, l), coeff)


class TestAdmissibleCwe:
    def test_matches_expected_monomial_for_monomial(self):
        assert admissible_cwe() == expected.admissible_cwe_expected()

    def test_free_monomial_vanishes(self):
        assert admissible_cwe().coeff((0, 15, 21)) == 0

    def test_a1_value(self):
        assert ADMISSIBLE_A1 == Fraction(-15180, 2916)

    def test_specialization_is_code_like(self):
        uni = admissible_cwe().specialize_x1_zy()
        assert uni.coeff(0) == 1
        assert uni.is_integral() and uni.is_nonnegative()
        assert all(e % 3 == 0 for e, _ in uni.terms)
        assert uni.coeff(12) == 42840
        assert uni.coefficient_sum() == 3 ** 18

    def test_weight36_stratum_symmetric(self):
        poly = admissible_cwe()
        for (i, j, l), v in poly.terms:
            if i == 0:
                assert poly.coeff((0, l, j)) == v


class TestGleason:
    def test_length36_condition_b(self):
        assert gleason_ternary_we(36, 9, 33) == expected.GLEASON_B_WE

    def test_length4(self):
        assert gleason_ternary_we(4, 3, 4) == \
            UnivariatePoly.from_dict({0: 1, 3: 8})

    def test_length12(self):
        assert gleason_ternary_we(12, 6, 12) == \
            UnivariatePoly.from_dict({0: 1, 6: 264, 9: 440, 12: 24})

    def test_cardinality(self):
        assert gleason_ternary_we(36, 9, 33).coefficient_sum() == 3 ** 18

    def test_no_solution(self):
        with pytest.raises(NoSolution):
            gleason_ternary_we(36, 13, 33)

    def test_non_unique_reports_dimension(self):
        # only the constant-term normalization binds the four basis terms
        with pytest.raises(NonUnique) as exc:
            gleason_ternary_we(36, 3, 36)
        assert exc.value.dimension == 3

    def test_rejects_bad_length(self):
        with pytest.raises(ValueError):
            gleason_ternary_we(34, 9, 33)


class TestThetaFormulas:
    def test_alpha_zero(self):
        theta, sh = extremal_theta36(0)
        assert theta == {0: 1, 4: 42840, 5: 1916928}
        assert sh == {1: 0, 3: 960, 5: 3799296}

    def test_alpha_two_tau(self):
        theta, _ = extremal_theta36(2)
        assert theta[4] == 51032

    def test_alpha_range(self):
        with pytest.raises(AlphaOutOfRange):
            extremal_theta36(17)
        with pytest.raises(AlphaOutOfRange):
            extremal_theta36(-1)

    def test_min3_kissing_960(self):
        theta, sh = min3_theta36(0, 0)
        assert theta[3] == 960
        assert sh == {1: 0, 3: 0, 5: 3833856}

    def test_min3_alpha60_beta1(self):
        _, sh = min3_theta36(60, 1)
        assert sh[1] == 1 and sh[3] == 0

    def test_min3_constraint(self):
        with pytest.raises(ConstraintViolated):
            min3_theta36(960, 0)
        with pytest.raises(ConstraintViolated):
            min3_theta36(59, 1)

    def test_condition_a_bookkeeping(self):
        theta, _ = extremal_theta36(0)
        assert theta[4] == 42840
        n1, n2 = expected.CONDITION_A_NCOUNTS
        assert n1 + n2 == 960
        assert n2 == 960 - expected.CONDITION_A_KISSING


class TestExtremalBound:
    @pytest.mark.parametrize("n,expect", [(36, 4), (23, 3), (24, 4), (1, 2),
                                          (48, 6)])
    def test_values(self, n, expect):
        assert extremal_bound(n) == expect

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            extremal_bound(0)
