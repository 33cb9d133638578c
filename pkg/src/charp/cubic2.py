"""The cubic surface y1^3 + t1 x1^2 y1 + y2^3 + t2 x2^2 y2 = 0 in characteristic 2.

Coordinates are ordered (x1 : x2 : y1 : y2).  The module covers the scheme
of non-smoothness, the m/m^2 regularity test at rational and purely
inseparable closed points, the conic fibration (y1 : y2), its Frobenius
base change, tangent plane sections and the Picard lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from charp.differentials import (
    is_p_independent,
    p_independence_rank,
    pth_power_in_root_extension,
    root_extension,
)
from charp.errors import (
    AllZero,
    BadCharacteristic,
    CertificateError,
    NotAPthPower,
    NotRational,
    PointNotOnSurface,
    SingularPoint,
    ZeroLeadingScalar,
)
from charp.exactfield.gcd import content
from charp.exactfield.insep import RootExtension
from charp.exactfield.multipoly import MultiPoly
from charp.exactfield.ratfunc import FieldElement, FractionField, rational_function_field
from charp.geometry import HypersurfaceSpec, ProjPoint
from charp.lattice import IntLattice

COORDS = ("x1", "x2", "y1", "y2")


@dataclass(frozen=True)
class CubicSurfaceSpec:
    t1: FieldElement
    t2: FieldElement
    surface: HypersurfaceSpec

    @property
    def field(self) -> FractionField:
        return self.surface.field

    @property
    def base(self) -> FractionField:
        return self.surface.base

    @property
    def defining(self) -> FieldElement:
        return self.surface.defining

    def gen(self, name: str) -> FieldElement:
        return self.field.gen(name)


def cubic_surface(t1=None, t2=None, m: int = 1) -> CubicSurfaceSpec:
    """Default scalars: the generators of GF(2^m)(t1, t2)."""
    if t1 is None and t2 is None:
        t1, t2 = rational_function_field(2, ["t1", "t2"], m).gens()
    elif t1 is None or t2 is None:
        raise ValueError("give both scalars or neither")
    base = t1.field
    if base.p != 2:
        raise BadCharacteristic("the cubic surface lives in characteristic 2")
    if base.coordinates:
        raise ValueError("scalars must live in a ground field without coordinates")
    t1, t2 = base.embed(t1), base.embed(t2)
    if t1.is_zero() or t2.is_zero():
        raise ZeroLeadingScalar("t1 and t2 must be nonzero")
    clash = set(COORDS) & set(base.ring.names)
    if clash:
        raise ValueError(f"coordinate names {sorted(clash)} clash with the ground field")
    F = base.extend(COORDS)
    x1, x2, y1, y2 = (F.gen(c) for c in COORDS)
    P = y1**3 + F.embed(t1) * x1**2 * y1 + y2**3 + F.embed(t2) * x2**2 * y2
    H = HypersurfaceSpec(F, COORDS, P, 3, (t1, t2), name="cubic2")
    return CubicSurfaceSpec(t1, t2, H)


# -- non-smoothness --

@dataclass(frozen=True)
class NonsmoothLocus:
    P1: FieldElement
    P2: FieldElement
    residual: FieldElement  # P - (y1 P1 + y2 P2)
    x_partials: tuple[FieldElement, FieldElement]

    @property
    def holds(self) -> bool:
        return self.residual.is_zero() and all(d.is_zero() for d in self.x_partials)


def cubic_nonsmooth_locus(S: CubicSurfaceSpec) -> NonsmoothLocus:
    """P1 = dP/dy1 = y1^2 + t1 x1^2, P2 likewise, and P = y1 P1 + y2 P2."""
    P = S.defining
    P1, P2 = P.derivative("y1"), P.derivative("y2")
    x1, x2, y1, y2 = (S.gen(c) for c in COORDS)
    t1, t2 = S.field.embed(S.t1), S.field.embed(S.t2)
    if P1 != y1**2 + t1 * x1**2 or P2 != y2**2 + t2 * x2**2:
        raise CertificateError("unexpected y-partials")
    res = P - (y1 * P1 + y2 * P2)
    return NonsmoothLocus(P1, P2, res, (P.derivative("x1"), P.derivative("x2")))


def projective_zero_set_empty(equations, coords) -> bool:
    """Decide emptiness over the algebraic closure for the special shapes used here.

    Equations that are single coordinates are used to set that coordinate
    to 0; afterwards every remaining coordinate must be forced to 0 by an
    equation c * v^k with c a nonzero scalar.
    """
    eqs = list(equations)
    coords = list(coords)
    F = eqs[0].field
    zeroed: set = set()
    changed = True
    while changed:
        changed = False
        reduced = [e.subs({c: F.zero() for c in zeroed}) for e in eqs]
        for e in reduced:
            if e.is_zero() or not e.num.is_monomial():
                continue
            vs = e.num.variables() & set(coords)
            if len(vs) == 1 and not (e.variables() - vs) & set(coords):
                (v,) = vs
                if v not in zeroed:
                    zeroed.add(v)
                    changed = True
    return zeroed == set(coords)


# -- inseparable closed points and the m/m^2 test --

@dataclass(frozen=True)
class InseparablePoint:
    """Closed point with residue field F[theta], theta^p = radicand.

    ``chart`` is the coordinate set to 1, ``values`` gives every other
    coordinate as coefficients (b_0, ..., b_(p-1)) of sum b_j theta^j.
    """

    chart: str
    radicand: FieldElement
    values: dict

    def residue_field(self) -> RootExtension:
        return RootExtension(self.radicand.field, self.radicand)


def _division_by_binomial(coeffs: dict, p: int, c: FieldElement, zero: FieldElement):
    """Divide sum a_k W^k by W^p - c: returns (quotient, remainder) as dicts."""
    a = {k: v for k, v in coeffs.items() if not v.is_zero()}
    q: dict = {}
    while any(k >= p for k in a):
        k = max(a)
        v = a.pop(k)
        q[k - p] = q.get(k - p, zero) + v
        a[k - p] = a.get(k - p, zero) + v * c
        a = {k: v for k, v in a.items() if not v.is_zero()}
    q = {k: v for k, v in q.items() if not v.is_zero()}
    return q, a


@dataclass(frozen=True)
class CotangentClass:
    """Class of the equation in m/m^2, as coordinates over the residue field."""

    basis: tuple[str, ...]
    coords: tuple  # RootElem or FieldElement entries
    on_surface: bool

    @property
    def is_nonzero(self) -> bool:
        return any(bool(c) if not isinstance(c, FieldElement) else not c.is_zero()
                   for c in self.coords)


def _affine(S: CubicSurfaceSpec, chart: str):
    others = [c for c in COORDS if c != chart]
    return others, S.defining.subs({chart: S.field.one()})


def cotangent_class(S: CubicSurfaceSpec, a) -> CotangentClass:
    if isinstance(a, ProjPoint):
        return _rational_class(S, a)
    return _inseparable_class(S, a)


def _rational_class(S: CubicSurfaceSpec, a: ProjPoint) -> CotangentClass:
    base = S.base
    vals = [base.embed(v) for v in a.coords]
    k = next(i for i, v in enumerate(vals) if not v.is_zero())
    chart = COORDS[k]
    vals = [v / vals[k] for v in vals]
    others, f = _affine(S, chart)
    point = {c: v for c, v in zip(COORDS, vals) if c != chart}
    on = f.subs(point, base).is_zero()
    grad = tuple(f.derivative(c).subs(point, base) for c in others)
    return CotangentClass(tuple(others), grad, on)


def _inseparable_class(S: CubicSurfaceSpec, a: InseparablePoint) -> CotangentClass:
    base = S.base
    p = base.p
    ext = a.residue_field()
    others, f = _affine(S, a.chart)
    vals = {}
    for c in others:
        cs = [base.embed(x) for x in a.values.get(c, ())]
        cs += [base.zero()] * (p - len(cs))
        vals[c] = cs
    # a coordinate whose value involves theta linearly gives the chart variable W
    k = next((c for c in others if not vals[c][1].is_zero()), None)
    if k is None:
        raise ValueError("no coordinate is linear in theta; the point is not given in triangular form")
    if any(not vals[k][j].is_zero() for j in range(2, p)):
        raise ValueError("pivot coordinate must be affine-linear in theta")
    rest = [c for c in others if c != k]
    names = ("W",) + tuple(f"W_{c}" for c in rest)
    T = S.field.extend(names)
    W = T.gen("W")
    alpha, beta = vals[k][0], vals[k][1]
    sub = {k: T.embed(alpha) + T.embed(beta) * W}
    for c in rest:
        phi = sum((T.embed(b) * W**j for j, b in enumerate(vals[c])), T.zero())
        sub[c] = T.gen(f"W_{c}") + phi
    g = f.subs(sub, T)
    # split by degree in the W_c variables
    split = g.num.coeffs_in_vars(names[1:])
    den = T(g.den)

    def as_dict(poly: MultiPoly) -> dict:
        # coefficients of powers of W, moved back to the ground field
        return {e: _to_base(T(cpoly) / den, base) for e, cpoly in poly.coeffs_in("W").items()}

    zero_key = (0,) * len(rest)
    f0 = as_dict(split.get(zero_key, T.ring.zero()))
    c = a.radicand
    quo, rem = _division_by_binomial(f0, p, c, base.zero())
    on = not rem
    _, B = _division_by_binomial(quo, p, c, base.zero())
    coords = [ext.evaluate(B)]
    for j in range(len(rest)):
        key = tuple(int(i == j) for i in range(len(rest)))
        coords.append(ext.evaluate(as_dict(split.get(key, T.ring.zero()))))
    return CotangentClass(("g",) + names[1:], tuple(coords), on)


def _to_base(v: FieldElement, base: FractionField) -> FieldElement:
    if v.variables() - set(base.ring.names):
        raise CertificateError(f"coefficient {v} still involves coordinates")
    return base.embed(FieldElement(base, v.num.to_ring(base.ring), v.den.to_ring(base.ring)))


def local_regularity_at(S: CubicSurfaceSpec, a) -> bool:
    """True iff the equation has nonzero class in m_a / m_a^2 (so O_{X,a} is regular)."""
    cls = cotangent_class(S, a)
    if not cls.on_surface:
        raise PointNotOnSurface(f"{a} does not lie on the surface")
    return cls.is_nonzero


def point_a(S: CubicSurfaceSpec) -> InseparablePoint:
    """(1 : 0 : sqrt(t1) : 0)."""
    return InseparablePoint("x1", S.t1, {"y1": (0, 1)})


def point_b(S: CubicSurfaceSpec) -> InseparablePoint:
    """(0 : 1 : 0 : sqrt(t2))."""
    return InseparablePoint("x2", S.t2, {"y2": (0, 1)})


def tensor_field_test(t1: FieldElement, t2: FieldElement) -> bool:
    """Is F(sqrt t1) tensor_F F(sqrt t2) a field?  Same as p-independence of t1, t2."""
    if t1.is_zero() or t2.is_zero():
        raise ZeroLeadingScalar("scalars must be nonzero")
    independent = p_independence_rank([t1, t2]) == 2
    # cross-check: t2 is a square in F(sqrt t1) exactly when the rank drops
    if not t1.is_pth_power():
        square = pth_power_in_root_extension(t2, t1) is not None
        if square == independent:  # pragma: no cover
            raise CertificateError("rank and root-extension tests disagree")
    return independent


# -- conics and the fibration --

@dataclass(frozen=True)
class ConicSpec:
    """a u0^2 + b u1^2 + c u2^2 in the named variables."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    variables: tuple[str, str, str] = ("u0", "u1", "u2")

    def __post_init__(self):
        if all(x.is_zero() for x in self.coefficients):
            raise AllZero("all conic coefficients are zero")

    @property
    def coefficients(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        return (self.a, self.b, self.c)

    def polynomial(self, field: FractionField) -> FieldElement:
        return sum((field.embed(k) * field.gen(v) ** 2
                    for k, v in zip(self.coefficients, self.variables)), field.zero())

    def __str__(self):
        return " + ".join(f"({k})*{v}^2" for k, v in zip(self.coefficients, self.variables))


@dataclass(frozen=True)
class ConicClass:
    is_regular: bool
    is_reduced: bool
    is_geometrically_reduced: bool


def conic_classify(C: ConicSpec) -> ConicClass:
    """Regularity, reducedness and geometric reducedness of a diagonal char-2 conic.

    Over the perfect closure the form is the square of a linear form, so it
    is never geometrically reduced.  It is reduced over F unless all
    normalized ratios are squares, and regular iff the two ratios are
    p-independent.
    """
    coeffs = C.coefficients
    if coeffs[0].field.p != 2:
        raise BadCharacteristic("diagonal conics are only classified in characteristic 2")
    k = next(i for i, x in enumerate(coeffs) if not x.is_zero())
    ratios = [x / coeffs[k] for i, x in enumerate(coeffs) if i != k]
    regular = is_p_independent(ratios)
    reduced = p_independence_rank(ratios) >= 1
    return ConicClass(regular, reduced, False)


def _lambda_field(S: CubicSurfaceSpec, lam: FieldElement) -> FractionField:
    base = lam.field
    missing = set(S.base.generators) - set(base.generators)
    if missing:
        raise ValueError(f"parameter field lacks generators {sorted(missing)}")
    return base.extend(COORDS)


@dataclass(frozen=True)
class Fiber:
    conic: ConicSpec
    plane: str  # the linear form cutting out the plane section
    excluded: bool  # lambda^3 = 1: coefficient of y1^2 vanishes
    residual: FieldElement  # P|plane - (residual factor) * conic


def fiber_at(S: CubicSurfaceSpec, lam) -> Fiber:
    """Fiber over (lambda : 1) (or over (1 : 0) for lam == "inf").

    The plane section {lambda y1 + y2 = 0} of X is L plus the conic
    (1 + lambda^3) y1^2 + t1 x1^2 + lambda t2 x2^2 in (y1, x1, x2).
    """
    if isinstance(lam, str):
        if lam != "inf":
            raise ValueError("lam must be a field element or 'inf'")
        F = S.field
        sect = S.defining.subs({"y1": F.zero()})
        conic = ConicSpec(S.base.one(), S.base.zero(), S.t2, ("y2", "x1", "x2"))
        residual = sect - F.gen("y2") * conic.polynomial(F)
        return Fiber(conic, "y1", False, residual)
    if not isinstance(lam, FieldElement):
        lam = S.base.const(lam)
    F = _lambda_field(S, lam)
    P = S.defining.subs({}, F)
    lamF = F.embed(lam)
    sect = P.subs({"y2": lamF * F.gen("y1")})
    base = lam.field
    one = base.one()
    conic = ConicSpec(one + lam**3, base.embed(S.t1), lam * base.embed(S.t2), ("y1", "x1", "x2"))
    residual = sect - F.gen("y1") * conic.polynomial(F)
    return Fiber(conic, "lam*y1 + y2", (lam**3).is_one(), residual)


def parameter_field(S: CubicSurfaceSpec, name: str = "lam") -> FractionField:
    """F(name), the function field of the base of the fibration."""
    gens = tuple(S.base.generators) + (name,)
    return rational_function_field(2, gens, S.base.gf.m, S.base.gf.gen_name)


@dataclass(frozen=True)
class BaseChange:
    q: int
    pulled_back: ConicSpec  # generic fiber over F(mu) after lam = mu^q
    constant: ConicSpec  # the same conic after the linear change, defined over F
    scalings: tuple[FieldElement, FieldElement, FieldElement]  # v_i = s_i u_i
    residual: FieldElement
    constant_in_mu: bool

    @property
    def holds(self) -> bool:
        return self.residual.is_zero() and self.constant_in_mu


def _split_square(a: FieldElement, var: str, p: int):
    """Write a = k * s^p with k free of ``var``; returns (k, s)."""
    field = a.field
    kn = content(a.num, var) if var in a.num.variables() else a.num
    kd = content(a.den, var) if var in a.den.variables() else a.den
    k = FieldElement(field, kn, kd)
    m = a / k
    if m.variables() - {var}:
        raise CertificateError(f"{a} does not split into a {var}-free part and a {var}-part")
    if not m.is_pth_power():
        raise NotAPthPower(f"{m} is not a {p}-th power")
    return k, m.pth_root()


def frobenius_base_change(S: CubicSurfaceSpec, nu: int = 1) -> BaseChange:
    """Base change of the generic fiber along lam = mu^q, q = 2^nu.

    Each coefficient splits as (mu-free scalar) * (square of a function of
    mu); rescaling u_i by that square root makes the conic constant in mu.
    For nu = 1 the change is v0 = (1 + mu^3) u0, v2 = mu u2.
    """
    if nu < 1:
        raise ValueError("nu must be >= 1")
    q = 2**nu
    M = parameter_field(S, "mu")
    mu = M.gen("mu")
    lam = mu**q
    one = M.one()
    pulled = ConicSpec(one + lam**3, M.embed(S.t1), lam * M.embed(S.t2))
    ks, ss = [], []
    for coeff in pulled.coefficients:
        k, s = _split_square(coeff, "mu", 2)
        ks.append(k)
        ss.append(s)
    constant_in_mu = all("mu" not in k.variables() for k in ks)
    const = ConicSpec(*[S.base.embed(_to_base(k, S.base)) for k in ks]) if constant_in_mu \
        else ConicSpec(*ks)
    T = M.extend(("u0", "u1", "u2"))
    lhs = pulled.polynomial(T)
    vsub = sum((T.embed(k) * (T.embed(s) * T.gen(f"u{i}")) ** 2
                for i, (k, s) in enumerate(zip(ks, ss))), T.zero())
    return BaseChange(q, pulled, const, tuple(ss), lhs - vsub, constant_in_mu)


# -- geometric rationality over F(sqrt t1) --

@dataclass(frozen=True)
class CubicRationality:
    transformed: FieldElement
    expected_ok: bool
    pullback_zero: bool

    @property
    def holds(self) -> bool:
        return self.expected_ok and self.pullback_zero


def cubic_rationality_witness(S: CubicSurfaceSpec) -> CubicRationality:
    """Over E = F(sqrt t1) put x1' = y1 + sqrt(t1) x1.

    The equation becomes y1 x1'^2 + y2^3 + t2 x2^2 y2; on x1' = 1 it is
    solved by y1 = y2^3 + t2 x2^2 y2, a parametrization by (x2, y2).
    """
    base = S.base
    if not (S.t1.is_polynomial() and S.t1.num == base.ring.gen(base.generators[0])):
        raise ValueError("needs t1 to be the first field generator")
    emb = root_extension(base, [base.generators[0]])
    E = emb.target.extend(COORDS + ("xp",))
    u = E.embed(emb.root_of(base.generators[0]))
    P = S.defining.subs({g: emb.target.gen(emb.roots[g]) ** 2 for g in emb.roots}, E)
    y1, y2, x2, xp = E.gen("y1"), E.gen("y2"), E.gen("x2"), E.gen("xp")
    t2 = E.embed(emb(S.t2))
    Q = P.subs({"x1": (xp + y1) / u})
    expected = y1 * xp**2 + y2**3 + t2 * x2**2 * y2
    param = {"xp": E.one(), "y1": y2**3 + t2 * x2**2 * y2}
    return CubicRationality(Q, Q == expected, Q.subs(param).is_zero())


# -- tangent sections --

@dataclass(frozen=True)
class TangentSection:
    point: ProjPoint
    plane: FieldElement  # c1 y1 + c2 y2
    eliminated: str
    curve: FieldElement  # X n T_a(X) in the remaining three coordinates
    linear_factor: str
    cofactor: FieldElement
    purely_inseparable: bool  # projection from the point
    on_line_L: bool


def projection_from_point(S: CubicSurfaceSpec, a: ProjPoint) -> tuple[FieldElement, FieldElement]:
    """(L1, L2) with P(a + s w) = s L1(w) + s^2 L2(w) + s^3 P(w).

    The projection from a has degree 2; in characteristic 2 it is separable
    iff L2 is not identically zero.
    """
    F = S.field
    T = F.extend(("s",))
    s = T.gen("s")
    vals = [T.embed(v) for v in a.coords]
    sub = {c: v + s * T.gen(c) for c, v in zip(COORDS, vals)}
    expanded = S.defining.subs(sub, T)
    by_s = expanded.num.coeffs_in("s")
    den = T(expanded.den)

    def part(k):
        return (T(by_s[k]) / den) if k in by_s else T.zero()

    if not part(0).is_zero():
        raise PointNotOnSurface(f"{a} is not on the surface")
    return part(1), part(2)


def tangent_section(S: CubicSurfaceSpec, a) -> TangentSection:
    if not isinstance(a, ProjPoint):
        raise NotRational("tangent sections are only computed at rational points")
    if a.field is not S.base:
        try:
            a = ProjPoint([S.base.embed(v) for v in a.coords])
        except Exception as exc:
            raise NotRational(f"{a} is not an F-point") from exc
    if not S.surface.contains(a):
        raise PointNotOnSurface(f"{a} is not on the surface")
    if not local_regularity_at(S, a):
        raise SingularPoint(f"O_(X,a) is not regular at {a}")
    F = S.field
    point = dict(zip(COORDS, a.coords))
    c1 = S.defining.derivative("y1").subs(point, S.base)
    c2 = S.defining.derivative("y2").subs(point, S.base)
    y1, y2 = F.gen("y1"), F.gen("y2")
    plane = F.embed(c1) * y1 + F.embed(c2) * y2
    if not c2.is_zero():
        elim, keep = "y2", "y1"
        curve = S.defining.subs({"y2": F.embed(-c1 / c2) * y1})
    else:
        elim, keep = "y1", "y2"
        curve = S.defining.subs({"y1": F.embed(-c2 / c1) * y2})
    lin = F.ring.gen(keep)
    if curve.is_zero() or not lin.divides(curve.num):
        raise CertificateError(f"tangent section {curve} has no linear factor {keep}")
    cof = FieldElement(F, curve.num.exact_div(lin), curve.den)
    _, L2 = projection_from_point(S, a)
    on_L = a.coords[2].is_zero() and a.coords[3].is_zero()
    return TangentSection(a, plane, elim, curve, keep, cof, L2.is_zero(), on_L)


# -- Picard lattice --

@dataclass(frozen=True)
class PicardData:
    lattice: IntLattice
    det: int
    discriminant_invariants: tuple[int, ...]
    discriminant_order: int
    dual_basis: tuple
    dual_orders: tuple[int, ...]
    anticanonical: tuple[int, int]
    K2: int
    L2: int
    C1_squared: int
    D: tuple[int, int]
    D_primitive: bool
    D_dot_C1: int
    L_dot_C1: int
    D_dot_L: int
    parity_basis_even: bool
    half_C1_parity: Fraction
    half_C1_in_dual: bool


def riemann_roch_parity(S: IntLattice, K, N):
    """(N.N) - (N.K); even for every N in Pic(X)."""
    return S.square(N) - S.pair(N, K)


def picard_lattice() -> PicardData:
    S = IntLattice([[0, 2], [2, -1]], ("C1", "L"))
    K = (-1, -1)
    C1, L = (1, 0), (0, 1)
    D = (1, 2)
    # parity on the basis and on the cross term 2 (C1.L); extends by bilinearity
    basis_even = all(riemann_roch_parity(S, K, v) % 2 == 0 for v in (C1, L)) \
        and (2 * S.pair(C1, L)) % 2 == 0
    half = (Fraction(1, 2), Fraction(0))
    dual = S.dual_basis()
    return PicardData(
        lattice=S,
        det=S.det(),
        discriminant_invariants=tuple(S.discriminant_invariants()),
        discriminant_order=S.discriminant_order(),
        dual_basis=tuple(dual),
        dual_orders=tuple(S.order_mod_lattice(v) for v in dual),
        anticanonical=(1, 1),
        K2=S.square(K),
        L2=S.square(L),
        C1_squared=S.square(C1),
        D=D,
        D_primitive=IntLattice.is_primitive(D),
        D_dot_C1=S.pair(D, C1),
        L_dot_C1=S.pair(L, C1),
        D_dot_L=S.pair(D, L),
        parity_basis_even=basis_even,
        half_C1_parity=riemann_roch_parity(S, K, half),
        half_C1_in_dual=S.in_dual(half),
    )


# -- regularity stratification --

@dataclass(frozen=True)
class Stratification:
    n: int
    case: str
    checks: dict


def regularity_stratification(t1: FieldElement, t2: FieldElement) -> Stratification:
    """Split by n = dim span(dt1, dt2) and certify the corresponding case."""
    S = cubic_surface(t1, t2)
    n = p_independence_rank([S.t1, S.t2])
    checks: dict = {}
    if n == 2:
        checks["regular_at_a"] = local_regularity_at(S, point_a(S))
        checks["regular_at_b"] = local_regularity_at(S, point_b(S))
        checks["tensor_product_is_field"] = tensor_field_test(S.t1, S.t2)
        return Stratification(2, "i: regular", checks)
    if n == 1:
        i, j = (0, 1) if not S.t1.is_pth_power() else (1, 0)
        ts = (S.t1, S.t2)
        ti, tj = ts[i], ts[j]
        # tj is a square in F(sqrt ti): (y_j + s x_j)^2 = y_j^2 + t_j x_j^2 there
        sol = pth_power_in_root_extension(tj, ti)
        checks["square_in_extension"] = sol is not None
        if sol is not None:
            ext = RootExtension(S.base, ti)
            s = ext(*sol)
            checks["nilpotent_square"] = (s * s).coeffs == ext(tj).coeffs
        pt = point_a(S) if i == 0 else point_b(S)
        checks["regular_at_inseparable_point"] = local_regularity_at(S, pt)
        checks["D_primitive"] = IntLattice.is_primitive(picard_lattice().D)
        return Stratification(1, "ii: normal, D non-reduced", checks)
    # both scalars are squares: rescale x_i to reach t1 = t2 = 1
    r1, r2 = S.t1.pth_root(), S.t2.pth_root()
    F = S.field
    sub = {"x1": F.gen("x1") / F.embed(r1), "x2": F.gen("x2") / F.embed(r2)}
    one = S.base.one()
    S1 = cubic_surface(one, one)
    checks["rescaled_to_t1_t2_1"] = S.defining.subs(sub) == S1.defining
    x1, x2, y1, y2 = (S1.gen(c) for c in COORDS)
    checks["square_decomposition"] = S1.defining == y1 * (y1 + x1) ** 2 + y2 * (y2 + x2) ** 2
    checks["singular_at_1111"] = not local_regularity_at(S1, ProjPoint.of(S1.base, [1, 1, 1, 1]))
    checks["singular_family"] = singular_family_check()
    return Stratification(0, "iii: non-normal", checks)


def singular_family_check() -> bool:
    """With t1 = t2 = 1 every (lam : mu : lam : mu) has zero class in m/m^2."""
    G = rational_function_field(2, ["lam", "mu"])
    S = cubic_surface(G.one(), G.one())
    lam, mu = G.gens()
    cls = cotangent_class(S, ProjPoint([lam, mu, lam, mu]))
    return cls.on_surface and not cls.is_nonzero
