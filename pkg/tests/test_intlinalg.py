import random
from fractions import Fraction

import pytest

from conftest import random_lattice
from ulat36.intlinalg import (bareiss_det, gram_matrix, hnf,
                              hnf_with_transform, identity_rows, invert,
                              left_kernel, lll_transform, mat_mul)


def test_hnf_canonical_under_row_mixing():
    rng = random.Random(1)
    for _ in range(20):
        m, n = rng.randint(1, 4), rng.randint(1, 5)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        h1 = hnf(rows)
        mixed = [list(r) for r in rows]
        rng.shuffle(mixed)
        if len(mixed) >= 2:
            mixed[0] = [a + 3 * b for a, b in zip(mixed[0], mixed[1])]
        assert hnf(mixed) == h1


def test_hnf_transform_consistency():
    rng = random.Random(2)
    for _ in range(10):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        h, u = hnf_with_transform(rows)
        assert mat_mul(u, rows) == h
        # transform must be unimodular
        if m == len(u):
            assert abs(bareiss_det(u)) == 1


def test_left_kernel():
    rows = [[2, 4], [1, 2], [3, 6]]
    ker = left_kernel(rows)
    for v in ker:
        assert all(sum(v[i] * rows[i][j] for i in range(3)) == 0 for j in range(2))
    assert len(ker) == 2


def test_bareiss_det_matches_expansion():
    rng = random.Random(3)

    def naive_det(a):
        n = len(a)
        if n == 1:
            return a[0][0]
        return sum((-1) ** j * a[0][j] *
                   naive_det([row[:j] + row[j + 1:] for row in a[1:]])
                   for j in range(n))

    for _ in range(15):
        n = rng.randint(1, 5)
        a = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(a) == naive_det(a)


def test_invert_round_trip():
    rng = random.Random(4)
    for _ in range(10):
        n = rng.randint(1, 5)
        a = random_lattice(rng, n)
        inv = invert(a)
        prod = mat_mul(a, inv)
        assert prod == [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _check_lll_reduced(basis, delta=Fraction(99, 100)):
    """Exact size-reduction and Lovasz verification via Fraction GSO."""
    n = len(basis)
    b = [[Fraction(x) for x in row] for row in basis]
    ortho = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        v = list(b[i])
        for j in range(i):
            denom = sum(x * x for x in ortho[j])
            mu[i][j] = sum(x * y for x, y in zip(b[i], ortho[j])) / denom
            v = [x - mu[i][j] * y for x, y in zip(v, ortho[j])]
        ortho.append(v)
    for i in range(n):
        for j in range(i):
            assert abs(mu[i][j]) <= Fraction(1, 2)
    for k in range(1, n):
        lhs = sum(x * x for x in ortho[k])
        rhs = (delta - mu[k][k - 1] ** 2) * sum(x * x for x in ortho[k - 1])
        assert lhs >= rhs


def test_lll_properties():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.randint(2, 6)
        basis = random_lattice(rng, n)
        u = lll_transform(gram_matrix(basis))
        assert abs(bareiss_det(u)) == 1
        reduced = mat_mul(u, basis)
        assert abs(bareiss_det(reduced)) == abs(bareiss_det(basis))
        _check_lll_reduced(reduced)


def test_lll_rejects_degenerate_gram():
    with pytest.raises(ValueError):
        lll_transform([[1, 1], [1, 1]])
