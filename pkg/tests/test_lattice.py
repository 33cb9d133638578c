import itertools
import math
import random
from fractions import Fraction

import pytest

import oracles
from charp.lattice import IntLattice, bareiss_det, smith_normal_form


def minors_gcd(M, k):
    g = 0
    rows, cols = len(M), len(M[0])
    for r in itertools.combinations(range(rows), k):
        for c in itertools.combinations(range(cols), k):
            g = math.gcd(g, oracles.int_det([[M[i][j] for j in c] for i in r]))
    return g


def test_det_matches_laplace():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 4)
        M = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(M) == oracles.int_det(M)


def test_smith_form_against_determinantal_divisors():
    rng = random.Random(2)
    for _ in range(150):
        r, c = rng.randint(1, 3), rng.randint(1, 3)
        M = [[rng.randint(-6, 6) for _ in range(c)] for _ in range(r)]
        d = smith_normal_form(M)
        prev = 1
        for k in range(1, min(r, c) + 1):
            g = minors_gcd(M, k)
            prod = math.prod(d[:k])
            assert prod == g
            if d[k - 1] and prev:
                assert d[k - 1] % prev == 0
            prev = d[k - 1]


def test_known_smith_form():
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]


def test_picard_gram_numbers():
    S = IntLattice([[0, 2], [2, -1]], ("C1", "L"))
    assert S.det() == -4
    assert S.discriminant_invariants() == [4]
    assert S.discriminant_order() == 4
    dual = S.dual_basis()
    assert dual == [(Fraction(1, 4), Fraction(1, 2)), (Fraction(1, 2), Fraction(0))]
    # oracle: pair(e_i*, e_j) = delta_ij and the order by brute force
    for i, v in enumerate(dual):
        for j, e in enumerate(S.basis()):
            assert S.pair(v, e) == int(i == j)
        k = next(k for k in range(1, 10) if all((k * x).denominator == 1 for x in v))
        assert S.order_mod_lattice(v) == k
    assert [S.order_mod_lattice(v) for v in dual] == [4, 2]


def test_vector_helpers():
    S = IntLattice([[0, 2], [2, -1]], ("C1", "L"))
    D = S.vector(C1=1, L=2)
    assert D == (1, 2)
    assert S.format_vector(D) == "C1 + 2*L"
    assert IntLattice.is_primitive(D)
    assert not IntLattice.is_primitive((2, 4))
    assert S.in_dual((Fraction(1, 2), Fraction(0)))
    with pytest.raises(KeyError):
        S.vector(K=1)


def test_validation():
    with pytest.raises(ValueError):
        IntLattice([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        IntLattice([[1, 2]])
    with pytest.raises(ValueError):
        IntLattice([[0, 0], [0, 0]]).dual_basis()
