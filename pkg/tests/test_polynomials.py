import random
from fractions import Fraction

import pytest

from ulat36.polynomials import TrivariatePoly, UnivariatePoly


def rand_uni(rng, deg=12):
    return UnivariatePoly.from_dict(
        {rng.randint(0, deg): Fraction(rng.randint(-9, 9), rng.randint(1, 4))
         for _ in range(rng.randint(0, 6))})


def rand_tri(rng, deg=4):
    d = {}
    for _ in range(rng.randint(1, 6)):
        i = rng.randint(0, deg)
        j = rng.randint(0, deg - i)
        d[(i, j, deg - i - j)] = Fraction(rng.randint(-5, 5))
    return TrivariatePoly.from_dict(deg, d)


def test_univariate_mul_associative():
    rng = random.Random(31)
    for _ in range(20):
        f, g, h = (rand_uni(rng) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f
        assert f + g == g + f


def test_univariate_no_zero_terms():
    p = UnivariatePoly.from_dict({0: 1, 3: 0, 5: Fraction(0)})
    assert p.terms == ((0, Fraction(1)),)


def test_univariate_json_round_trip():
    p = UnivariatePoly.from_dict({0: 1, 16: 63, 20: Fraction(1, 3)})
    assert UnivariatePoly.from_json_map(p.to_json_map()) == p


def test_univariate_pow_matches_repeated_mul():
    g = UnivariatePoly.from_dict({0: 1, 3: 8})
    assert g ** 3 == g * g * g


def test_trivariate_mul_associative():
    rng = random.Random(32)
    for _ in range(15):
        f, g, h = rand_tri(rng, 3), rand_tri(rng, 2), rand_tri(rng, 4)
        assert (f * g) * h == f * (g * h)


def test_trivariate_homogeneity_enforced():
    with pytest.raises(ValueError):
        TrivariatePoly.from_dict(3, {(1, 1, 0): 1})


def test_trivariate_specialize():
    x, y, z = (TrivariatePoly.variable(i) for i in range(3))
    p = x * y + x * z + y * z
    assert p.specialize_x1_zy() == UnivariatePoly.from_dict({1: 2, 2: 1})


def test_trivariate_swap_yz():
    p = TrivariatePoly.from_dict(3, {(2, 1, 0): 5, (0, 0, 3): 1})
    assert p.swap_yz() == TrivariatePoly.from_dict(3, {(2, 0, 1): 5, (0, 3, 0): 1})


def test_print_order_decreasing_i_then_j():
    p = TrivariatePoly.from_dict(3, {(0, 3, 0): 1, (3, 0, 0): 2, (0, 0, 3): 1,
                                     (1, 2, 0): 4})
    assert str(p) == "2 x^3 + 4 xy^2 + y^3 + z^3"
