import itertools

import pytest

import oracles
from charp import cubic2 as C
from charp.errors import (BadCharacteristic, NotRational, PointNotOnSurface,
                          SingularPoint, ZeroLeadingScalar)
from charp.exactfield import rational_function_field
from charp.geometry import ProjPoint

S = C.cubic_surface()


def test_equation_and_jacobian_identity():
    assert S.defining.format() == "t1*x1^2*y1 + t2*x2^2*y2 + y1^3 + y2^3"
    loc = C.cubic_nonsmooth_locus(S)
    assert loc.holds
    # oracle over GF(2)[t1, t2, x1, x2, y1, y2]: P = y1 P1 + y2 P2
    P = {(1, 0, 2, 0, 1, 0): 1, (0, 1, 0, 2, 0, 1): 1, (0, 0, 0, 0, 3, 0): 1, (0, 0, 0, 0, 0, 3): 1}
    P1 = oracles.pderiv(P, 4, 2)
    P2 = oracles.pderiv(P, 5, 2)
    y1 = {(0, 0, 0, 0, 1, 0): 1}
    y2 = {(0, 0, 0, 0, 0, 1): 1}
    assert oracles.padd(oracles.pmul(y1, P1, 2), oracles.pmul(y2, P2, 2), 2) == P
    assert oracles.pderiv(P, 2, 2) == {} and oracles.pderiv(P, 3, 2) == {}


def test_construction_errors():
    G = rational_function_field(3, ["t1", "t2"])
    with pytest.raises(BadCharacteristic):
        C.cubic_surface(*G.gens())
    F = rational_function_field(2, ["t1", "t2"])
    with pytest.raises(ZeroLeadingScalar):
        C.cubic_surface(F.zero(), F.gen("t2"))
    with pytest.raises(ValueError):
        C.cubic_surface(F.gen("t1"))


def test_regular_at_inseparable_points():
    assert C.local_regularity_at(S, C.point_a(S))
    assert C.local_regularity_at(S, C.point_b(S))
    assert C.tensor_field_test(S.t1, S.t2)


def test_singular_at_1111_when_scalars_are_one():
    F = rational_function_field(2, ["t1", "t2"])
    S1 = C.cubic_surface(F.one(), F.one())
    a = ProjPoint.of(S1.base, [1, 1, 1, 1])
    assert not C.local_regularity_at(S1, a)
    assert C.singular_family_check()
    with pytest.raises(SingularPoint):
        C.tangent_section(S1, a)


def test_rational_point_regularity_is_nonvanishing_gradient():
    # every GF(4)-point of y1^3 + x1^2 y1 + y2^3 + x2^2 y2
    F = rational_function_field(2, ["t"], 2)
    S1 = C.cubic_surface(F.one(), F.one())
    gf = F.gf
    seen = 0
    for v in itertools.product(range(4), repeat=4):
        if not any(v):
            continue
        x1, x2, y1, y2 = v
        val = 0
        for term in (gf.pow(y1, 3), gf.mul(gf.mul(x1, x1), y1), gf.pow(y2, 3),
                     gf.mul(gf.mul(x2, x2), y2)):
            val = gf.add(val, term)
        if val:
            continue
        pt = ProjPoint([F.const_code(c) for c in v])
        grad = [gf.add(gf.mul(y1, y1), gf.mul(x1, x1)), gf.add(gf.mul(y2, y2), gf.mul(x2, x2))]
        assert C.local_regularity_at(S1, pt) == any(grad)
        seen += 1
    assert seen > 0


def test_point_not_on_surface():
    with pytest.raises(PointNotOnSurface):
        C.local_regularity_at(S, ProjPoint.of(S.base, [1, 1, 1, 1]))


def test_fibers_by_hand():
    F = S.base
    t1, t2 = F.gens()
    for lam in (F.zero(), F.one(), t1, t1 * t2 + 1):
        fib = C.fiber_at(S, lam)
        assert fib.residual.is_zero()
        # P|_{y2 = lam y1} = y1 ((1 + lam^3) y1^2 + t1 x1^2 + lam t2 x2^2)
        assert fib.conic.coefficients == (1 + lam**3, t1, lam * t2)
        assert fib.excluded == (lam**3).is_one()
    inf = C.fiber_at(S, "inf")
    assert inf.residual.is_zero() and inf.plane == "y1"
    with pytest.raises(ValueError):
        C.fiber_at(S, "zero")


def test_conic_classify():
    F = S.base
    t1, t2 = F.gens()
    cls = C.conic_classify(C.ConicSpec(F.one(), t1, t2))
    assert cls.is_regular and cls.is_reduced and not cls.is_geometrically_reduced
    cls = C.conic_classify(C.ConicSpec(F.one(), t1, t1**2 * t2**2))
    assert not cls.is_regular and cls.is_reduced
    cls = C.conic_classify(C.ConicSpec(t1, F.zero(), F.zero()))
    assert not cls.is_regular and not cls.is_reduced


@pytest.mark.parametrize("nu", [1, 2, 3])
def test_frobenius_base_change(nu):
    bc = C.frobenius_base_change(S, nu)
    assert bc.residual.is_zero() and bc.constant_in_mu
    F = S.base
    assert bc.constant.coefficients == (F.one(), S.t1, S.t2)
    q = 2**nu
    M = C.parameter_field(S, "mu")
    mu = M.gen("mu")
    # (1 + mu^(3q)) = (1 + mu^(3q/2))^2 and mu^q t2 = (mu^(q/2))^2 t2
    assert bc.scalings == (1 + mu ** (3 * q // 2), M.one(), mu ** (q // 2))


def test_rationality_over_root():
    w = C.cubic_rationality_witness(S)
    assert w.holds


def test_tangent_sections_gf4():
    S4 = C.cubic_surface(m=2)
    a = S4.base.const_code(S4.base.gf.gen().code)
    sec = C.tangent_section(S4, ProjPoint([S4.base.zero(), S4.base.zero(), S4.base.one(), a]))
    assert sec.linear_factor == "y1" and not sec.purely_inseparable and not sec.on_line_L
    assert sec.cofactor * S4.gen("y1") == sec.curve
    sec = C.tangent_section(S4, ProjPoint.of(S4.base, [1, 0, 0, 0]))
    assert sec.purely_inseparable and sec.on_line_L
    with pytest.raises(NotRational):
        C.tangent_section(S4, C.point_a(S4))
    with pytest.raises(PointNotOnSurface):
        C.tangent_section(S4, ProjPoint.of(S4.base, [0, 0, 1, 0]))


def test_picard_lattice():
    pic = C.picard_lattice()
    assert pic.det == -4 and pic.discriminant_order == 4
    assert pic.K2 == 3 and pic.L2 == -1 and pic.C1_squared == 0
    assert pic.D == (1, 2) and pic.D_primitive
    assert pic.D_dot_C1 == 4 and pic.L_dot_C1 == 2 and pic.D_dot_L == 0
    assert pic.parity_basis_even
    assert pic.half_C1_parity == 1
    assert pic.dual_orders == (4, 2)


def test_stratification():
    F = S.base
    t1, t2 = F.gens()
    for a, b, n in [(t1, t2, 2), (t1, t2**2, 1), (t1**2, t2, 1), (F.one(), F.one(), 0),
                    (t1**2, t2**2, 0)]:
        st = C.regularity_stratification(a, b)
        assert st.n == n
        assert all(st.checks.values()), st.checks


def test_projective_zero_set_empty():
    F = S.field
    x1, x2, y1, y2 = (F.gen(c) for c in C.COORDS)
    assert C.projective_zero_set_empty([x1, x2, y1**2, F.embed(S.t1) * y2**3 + x1], C.COORDS)
    assert not C.projective_zero_set_empty([x1, x2, y1], C.COORDS)
