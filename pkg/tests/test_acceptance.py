"""The numbered acceptance criteria, each under its time limit.

Every test records a PASS/FAIL line that conftest prints in the terminal summary.
"""

import contextlib
import itertools
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

import oracles
from charp import cubic2 as C
from charp import hyperkollar as K
from charp.exactfield import rational_function_field
from charp.geometry import ProjPoint
from conftest import ACCEPTANCE
from properties import PRIMES, property_tests

pytestmark = pytest.mark.acceptance


@contextlib.contextmanager
def criterion(num, title, limit=None):
    start = time.perf_counter()
    passed = False
    try:
        yield
        passed = True
    finally:
        secs = time.perf_counter() - start
        in_time = limit is None or secs < limit
        ACCEPTANCE.append((num, title, passed and in_time, secs, limit))
    assert in_time, f"criterion {num} took {secs:.2f}s, limit {limit}s"


def test_01_support_certificate():
    with criterion(1, "non-smoothness support certificate, p in {3,5}, n in {1,2}", 1):
        for p, n in itertools.product((3, 5), (1, 2)):
            H = K.kollar_hypersurface(p, n)
            cert = K.nonsmooth_support_certificate(H)
            assert cert.holds
            # by hand: d/dy = p y^(p-1) - z^(p-1), d/dz = -(p-1) y z^(p-2) = y z^(p-2)
            R = H.field
            y, z = R.gen("y"), R.gen("z")
            assert H.defining.derivative("y") == -(z ** (p - 1))
            assert H.defining.derivative("z") == y * z ** (p - 2)


def _monomial(F, e):
    out = F.one()
    for g, k in zip(F.generators, e):
        out = out * F.gen(g) ** k if k >= 0 else out / F.gen(g) ** (-k)
    return out


def _cases(rng):
    """20 families of Laurent monomials: generators, p-th powers, products, ratios."""
    cases = []
    while len(cases) < 20:
        p = PRIMES[len(cases) % 3]
        size = rng.randint(1, 3)
        fam = []
        for _ in range(size):
            a, b = rng.randrange(3), rng.randrange(3)
            kind = rng.choice(("gen", "power", "product", "ratio"))
            e = [0, 0, 0]
            if kind == "gen":
                e[a] = 1
            elif kind == "power":
                e[a] = p
            elif kind == "product":
                e[a] += 1
                e[b] += 1
            else:
                e[a] += 1
                e[b] -= 1
            fam.append(e)
        if any(e != [0, 0, 0] for e in fam):
            cases.append((p, fam))
    return cases


def test_02_fermat_regular_matches_jacobian_rank():
    cases = _cases(random.Random(2))
    with criterion(2, "fermat_regular agrees with Jacobian rank on 20 cases", 1):
        agree = 0
        for p, fam in cases:
            F = rational_function_field(p, ["t1", "t2", "t3"])
            elems = [_monomial(F, e) for e in fam]
            expected = oracles.monomial_rank(fam, p) == len(fam)
            agree += K.fermat_regular(elems) == expected
        assert agree == len(cases) == 20
    # the matrix exercises both outcomes
    outcomes = {oracles.monomial_rank(f, p) == len(f) for p, f in cases}
    assert outcomes == {True, False}


def test_03_rationality_witness():
    with criterion(3, "rationality witness, p in {3,5}, n in {1,2}", 5):
        for p, n in itertools.product((3, 5), (1, 2)):
            w = K.geometric_rationality_witness(p, n)
            assert w.pullback_zero
            assert w.inverse_after_forward


def test_04_point_counts():
    with criterion(4, "point search: (p,n,d)=(3,1,2) gives 3, (5,1,1) gives 5", 60):
        for p, d in ((3, 2), (5, 1)):
            found = K.kollar_point_search(p, 1, d)
            assert len(found) == p
            assert set(found) == set(K.obvious_points(K.kollar_hypersurface(p, 1)))


def test_05_laurent_search():
    with criterion(5, "no Laurent solution with h != 0, p=3, degree <= 2", 60):
        res = K.laurent_exhaustive_search(3, 2)
        assert res.triples == 3**9
        assert res.with_h_nonzero == []
        # solutions with h = 0, counted independently
        polys = list(oracles.all_dense_polys(3, 2))
        expected = sum(
            1 for f, g in itertools.product(polys, repeat=2)
            if oracles.dense_pow(f, 3, 3) == oracles.dense_mul(f, oracles.dense_pow(g, 2, 3), 3))
        assert res.solutions == expected


def test_06_cubic_surface():
    with criterion(6, "cubic identity and local regularity", 1):
        S = C.cubic_surface()
        assert C.cubic_nonsmooth_locus(S).holds
        a, b = C.point_a(S), C.point_b(S)
        assert C.local_regularity_at(S, a)
        assert C.local_regularity_at(S, b)
        F = rational_function_field(2, ["t1", "t2"])
        S1 = C.cubic_surface(F.one(), F.one())
        assert not C.local_regularity_at(S1, ProjPoint.of(S1.base, [1, 1, 1, 1]))
    # oracle: all partials of y1^3 + x1^2 y1 + y2^3 + x2^2 y2 vanish at (1,1,1,1) mod 2
    P = {(2, 0, 1, 0): 1, (0, 2, 0, 1): 1, (0, 0, 3, 0): 1, (0, 0, 0, 3): 1}
    assert all(oracles.peval(oracles.pderiv(P, i, 2), (1, 1, 1, 1), 2) == 0 for i in range(4))


def test_07_frobenius_base_change():
    with criterion(7, "base change nu=1: zero residual, regular non-reduced conic", 1):
        S = C.cubic_surface()
        bc = C.frobenius_base_change(S, 1)
        assert bc.residual.is_zero() and bc.constant_in_mu
        cls = C.conic_classify(bc.constant)
        assert cls.is_regular and not cls.is_geometrically_reduced


def test_08_lattice():
    with criterion(8, "Picard lattice numbers", 1):
        d = C.picard_lattice()
        assert d.lattice.gram == ((0, 2), (2, -1))
        assert d.det == -4 == oracles.int_det([[0, 2], [2, -1]])
        assert d.discriminant_order == 4
        assert d.K2 == 3 and d.L2 == -1
        assert d.D == (1, 2) and d.D_primitive
        assert d.parity_basis_even
        # (N.N) - (N.K) at N = C1/2 with K = -(C1 + L): 0 + 1 = 1, odd
        assert d.half_C1_parity == Fraction(1)


def test_09_property_suites():
    counts = {}
    with criterion(9, "property suites, >= 1000 cases per law per prime", 120):
        for p in PRIMES:
            counter = {}
            for law in property_tests(p, examples=1000, counter=counter).values():
                law()
            counts[p] = counter
    for p in PRIMES:
        assert set(counts[p]) == {"field_axioms", "leibniz", "pth_root", "round_trip"}
        assert min(counts[p].values()) >= 1000, counts[p]


def _verify_all():
    out = subprocess.run([sys.executable, "-m", "charp", "verify", "all", "--seed", "0"],
                         capture_output=True, check=False)
    assert out.returncode == 0, out.stderr.decode()
    return out.stdout


def test_10_determinism():
    with criterion(10, "two verify-all runs give byte-identical JSON"):
        first, second = _verify_all(), _verify_all()
        assert first == second and first.startswith(b"{")
