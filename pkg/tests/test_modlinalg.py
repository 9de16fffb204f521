import random

import pytest

from ppchars import modlinalg as ml
from ppchars.errors import ConsistencyError

P = 101


def test_mat_inverse_roundtrip():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randrange(1, 6)
        a = [[rng.randrange(P) for _ in range(n)] for _ in range(n)]
        try:
            inv = ml.mat_inv(a, P)
        except ValueError:
            continue
        assert ml.mat_mul(a, inv, P) == ml.mat_identity(n)


def test_mat_inv_singular():
    with pytest.raises(ValueError):
        ml.mat_inv([[1, 2], [2, 4]], P)


def test_nullspace():
    a = [[1, 2, 3], [2, 4, 6]]
    basis = ml.nullspace(a, P)
    assert len(basis) == 2
    for v in basis:
        assert ml.mat_vec(a, v, P) == [0, 0]


def test_charpoly_known():
    # companion matrix of x^3 - 2x - 5
    a = [[0, 0, 5], [1, 0, 2], [0, 1, 0]]
    assert ml.charpoly(a, P) == [(-5) % P, (-2) % P, 0, 1]
    assert ml.charpoly([[7]], P) == [(-7) % P, 1]


def test_charpoly_matches_eigen_brute():
    rng = random.Random(5)
    p = 13
    for _ in range(25):
        n = rng.randrange(1, 5)
        a = [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
        f = ml.charpoly(a, p)
        assert len(f) == n + 1 and f[-1] == 1
        # roots of charpoly are exactly the eigenvalues (nontrivial kernel)
        for z in range(p):
            value = sum(c * pow(z, i, p) for i, c in enumerate(f)) % p
            shifted = [[(a[i][j] - (z if i == j else 0)) % p for j in range(n)]
                       for i in range(n)]
            assert (value == 0) == bool(ml.nullspace(shifted, p))


def test_distinct_roots_vs_scan():
    rng = random.Random(11)
    p = 31
    for _ in range(30):
        deg = rng.randrange(1, 7)
        f = [rng.randrange(p) for _ in range(deg)] + [1]
        expected = sorted(
            z for z in range(p)
            if sum(c * pow(z, i, p) for i, c in enumerate(f)) % p == 0
        )
        assert ml.distinct_roots(f, p, random.Random(0)) == expected


def test_poly_divmod_roundtrip():
    rng = random.Random(7)
    for _ in range(40):
        f = [rng.randrange(P) for _ in range(rng.randrange(1, 9))]
        g = [rng.randrange(P) for _ in range(rng.randrange(1, 5))]
        if not any(g):
            continue
        q, r = ml.poly_divmod(f, g, P)
        recombined = ml.poly_trim(
            [(a + b) % P for a, b in
             zip(ml.poly_mul(q, ml.poly_trim(list(g)), P) + [0] * 16,
                 list(r) + [0] * 16)]
        )
        assert recombined == ml.poly_trim([x % P for x in f])


def test_solve_in_span():
    basis = [[1, 0, 2], [0, 1, 3]]
    targets = [[2, 3, 13], [1, 1, 5]]
    coeffs = ml.solve_in_span(basis, targets, P)
    assert coeffs == [[2, 3], [1, 1]]
    with pytest.raises(ConsistencyError):
        ml.solve_in_span(basis, [[0, 0, 1]], P)
