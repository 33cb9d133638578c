import itertools

import pytest

import oracles
from charp import hyperkollar as K
from charp.errors import BadCharacteristic, BadIndex, NotAPthPower, ZeroLeadingScalar
from charp.exactfield import rational_function_field
from charp.geometry import ProjPoint


def test_equation_and_coordinates():
    H = K.kollar_hypersurface(3, 1)
    assert H.coords == ("x1", "y", "z")
    assert H.defining.format() == "t1*x1^3 + y^3 + 2*y*z^2"
    assert H.degree == 3


@pytest.mark.parametrize("p,n", [(2, 1), (4, 1), (1, 1)])
def test_bad_characteristic(p, n):
    with pytest.raises(BadCharacteristic):
        K.kollar_hypersurface(p, n)


def test_bad_index_and_zero_scalar():
    with pytest.raises(BadIndex):
        K.kollar_hypersurface(3, 0)
    F = rational_function_field(3, ["t1"])
    with pytest.raises(ZeroLeadingScalar):
        K.kollar_hypersurface(3, 1, [F.zero()])


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1), (5, 2)])
def test_nonsmooth_generators_shape(p, n):
    H = K.kollar_hypersurface(p, n)
    gens = K.nonsmooth_generators(H)
    y, z = H.coord("y"), H.coord("z")
    assert gens[-2] == -(z ** (p - 1))
    assert gens[-1] == y * z ** (p - 2)
    assert all(g.is_zero() for g in gens[:-2])
    cert = K.nonsmooth_support_certificate(H)
    assert cert.holds


@pytest.mark.parametrize("p", [3, 5])
def test_obvious_points_lie_on_x(p):
    H = K.kollar_hypersurface(p, 2)
    pts = K.obvious_points(H)
    assert len(set(pts)) == p
    assert all(H.contains(a) for a in pts)


def test_fermat_regular_matches_monomial_oracle():
    F = rational_function_field(3, ["t1", "t2"])
    t1, t2 = F.gens()
    cases = [([t1], [[1, 0]]), ([t1**3], [[3, 0]]), ([t1, t2], [[1, 0], [0, 1]]),
             ([t1, t1 * t2], [[1, 0], [1, 1]]), ([t1, t1**4], [[1, 0], [4, 0]]),
             ([t1 / t2, t2], [[1, -1], [0, 1]]), ([t1 * t2, t1 / t2], [[1, 1], [1, -1]])]
    for fam, exps in cases:
        assert K.fermat_regular(fam) == (oracles.monomial_rank(exps, 3) == len(exps))
    # a non-unit leading coefficient divides everything through
    assert K.fermat_regular([t2], t0=t1)
    assert not K.fermat_regular([t1**3], t0=F.one())


def test_eisenstein_criterion():
    F = rational_function_field(3, ["v", "y", "z"])
    R = F.ring
    v, y, z = R.gens()
    assert K.eisenstein_criterion(v**3 - y * z**2, "v", y)
    assert not K.eisenstein_criterion(v**3 - y**2, "v", y)
    assert not K.eisenstein_criterion(y * v**3 - y, "v", y)


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (5, 1)])
def test_certificates(p, n):
    H = K.kollar_hypersurface(p, n)
    assert K.regularity_certificate(H)
    e = K.eisenstein_certificate(H)
    assert e.identity_ok and e.eisenstein_ok
    w = K.geometric_rationality_witness(p, n)
    assert w.pullback_zero and w.inverse_after_forward and w.forward_after_inverse


@pytest.mark.parametrize("p", [3, 5])
def test_parametrization_by_hand(p):
    # with t = u^p, x = (s - s^p)/u, y = s^p, z = 1:
    # t x^p + y^p - y = (s - s^p)^p + s^(p^2) - s^p must vanish identically
    s = {(1,): 1}
    sp = oracles.ppow(s, p, p, 1)
    lhs = oracles.ppow(oracles.padd(s, oracles.pneg(sp, p), p), p, p, 1)
    lhs = oracles.padd(lhs, oracles.ppow(s, p * p, p, 1), p)
    lhs = oracles.padd(lhs, oracles.pneg(sp, p), p)
    assert lhs == {}
    w = K.geometric_rationality_witness(p, 1)
    x1 = w.forward.components[0]
    assert x1.format() == f"({p - 1}*s^{p} + s)/u1"


def test_projective_equivalence_and_cone():
    F = rational_function_field(3, ["t1"])
    t1 = F.gen("t1")
    lam = t1 + 1
    H = K.kollar_hypersurface(3, 2, [t1, t1 * lam**3])
    step = K.projective_equivalence_step(H)
    assert step.lam == lam
    cone = K.cone_reduction(step.target)
    assert cone.base.defining == K.kollar_hypersurface(3, 1, [t1]).defining
    assert str(cone.vertex) == "(0:1:0:0)"
    with pytest.raises(NotAPthPower):
        K.projective_equivalence_step(K.kollar_hypersurface(3, 2))
    with pytest.raises(BadIndex):
        K.projective_equivalence_step(K.kollar_hypersurface(3, 1))


@pytest.mark.parametrize("p,n", [(3, 2), (3, 3), (5, 2)])
def test_descent_ingredients(p, n):
    steps = K.descent_ingredients(p, n)
    assert [s.name for s in steps] == ["exchange", "remain_independent",
                                       "projective_equivalence", "cone", "base_regular"]
    assert all(s.holds for s in steps)


def brute_points(p, d):
    """Canonical coprime (x, y, z) in GF(p)[t], degree <= d, on t x^p + y^p - y z^(p-1)."""
    polys = list(oracles.all_dense_polys(p, d))
    out = set()
    for x, y, z in itertools.product(polys, repeat=3):
        lead = next((c for c in (x, y, z) if c), None)
        if lead is None or lead[-1] != 1:
            continue
        val = oracles.dense_mul([0, 1], oracles.dense_pow(x, p, p), p)
        for term in (oracles.dense_pow(y, p, p),
                     [(-c) % p for c in oracles.dense_mul(y, oracles.dense_pow(z, p - 1, p), p)]):
            n = max(len(val), len(term))
            val = [((val[i] if i < len(val) else 0) + (term[i] if i < len(term) else 0)) % p
                   for i in range(n)]
            while val and val[-1] == 0:
                val.pop()
        if val:
            continue
        g = oracles.dense_gcd(oracles.dense_gcd(x, y, p), z, p)
        if g == [1]:
            out.add((tuple(x), tuple(y), tuple(z)))
    return out


def to_dense_tuple(point):
    out = []
    for q in point.primitive():
        d = [0] * (0 if q.is_zero() else q.degree() + 1)
        for (i,), c in q.terms.items():
            d[i] = c
        out.append(tuple(d))
    return tuple(out)


@pytest.mark.parametrize("p,d", [(3, 1), (3, 2), (5, 1)])
def test_point_search_matches_brute_force(p, d):
    found = K.kollar_point_search(p, 1, d)
    assert {to_dense_tuple(a) for a in found} == brute_points(p, d)
    assert len(found) == p


def test_point_search_p3_n2_degree1():
    found = K.kollar_point_search(3, 2, 1)
    H = K.kollar_hypersurface(3, 2)
    assert set(found) == set(K.obvious_points(H))


def test_laurent_search_against_brute_force():
    p = 3
    res = K.laurent_exhaustive_search(p, 2)
    polys = list(oracles.all_dense_polys(p, 2))
    sols = bad = 0
    for f, g, h in itertools.product(polys, repeat=3):
        # f^p - f g^(p-1) + t h^p at all points of GF(p^2) would be overkill: compare dense
        a = oracles.dense_pow(f, p, p)
        b = oracles.dense_mul(f, oracles.dense_pow(g, p - 1, p), p)
        c = oracles.dense_mul([0, 1], oracles.dense_pow(h, p, p), p)
        n = max(len(a), len(b), len(c))
        tot = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                + (c[i] if i < len(c) else 0)) % p for i in range(n)]
        if not any(tot):
            sols += 1
            bad += bool(h)
    assert res.triples == len(polys) ** 3 == 3**9
    assert res.solutions == sols
    assert bad == 0 and not res.with_h_nonzero


def test_laurent_substitution_requires_units_congruent_to_one():
    with pytest.raises(ValueError):
        K.laurent_substitution_check(ProjPoint.of(rational_function_field(3, ["t1"]),
                                                  [0, 0, 1]), [2])


def test_laurent_substitution_of_points_on_x():
    # points of the n = 2 member map to solutions of the one-variable equation
    F = rational_function_field(3, ["t1", "t2"])
    for a in K.obvious_points(K.kollar_hypersurface(3, 2)):
        red = K.laurent_substitution_check(a, [1, 4])
        assert red.residual == []
    R = F.extend(("x1", "x2", "y", "z")).ring
    x = [R.gen("t1"), R.zero(), R.one(), R.one()]
    red = K.laurent_substitution_check([q.to_ring(F.ring) for q in x], [1, 4])
    # t1 -> t: residual is t * t^3 = t^4 (h = t, f = g = 1)
    assert red.h == [0, 1]
    assert red.residual == [0, 0, 0, 0, 1]
