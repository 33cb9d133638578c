"""The degree-p hypersurfaces y^p - y z^(p-1) + sum t_i x_i^p = 0.

Construction, the scheme of non-smoothness, regularity and integrality
certificates, the linear change of coordinates that kills a coefficient,
an explicit parametrization after adjoining all t_i^(1/p), and brute-force
searches for rational points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from charp.differentials import adjoin_root_rank, is_p_independent, root_extension
from charp.errors import (
    AllZero,
    BadCharacteristic,
    BadIndex,
    CertificateError,
    DivisionByZero,
    NotAPthPower,
    ZeroLeadingScalar,
)
from charp.exactfield.galois import is_prime
from charp.exactfield.multipoly import MultiPoly
from charp.exactfield.ratfunc import FieldElement, rational_function_field
from charp.geometry import HypersurfaceSpec, ProjPoint, RationalMap, bounded_point_search


def kollar_coords(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1)) + ("y", "z")


def generic_scalars(p: int, n: int, m: int = 1) -> list[FieldElement]:
    """t_1, ..., t_n as the generators of GF(p^m)(t_1, ..., t_n)."""
    return rational_function_field(p, [f"t{i}" for i in range(1, n + 1)], m).gens()


def kollar_hypersurface(p: int, n: int, t=None) -> HypersurfaceSpec:
    """X: y^p - y z^(p-1) + sum t_i x_i^p in P^(n+1) over the field of the t_i."""
    if not is_prime(p):
        raise BadCharacteristic(f"{p} is not prime")
    if p == 2:
        raise BadCharacteristic("this family needs p >= 3")
    if n < 1:
        raise BadIndex("n must be >= 1")
    t = generic_scalars(p, n) if t is None else list(t)
    if len(t) != n:
        raise BadIndex(f"expected {n} scalars, got {len(t)}")
    base = t[0].field
    if base.coordinates:
        raise ValueError("scalars must live in a ground field without coordinates")
    if base.p != p:
        raise BadCharacteristic(f"scalars have characteristic {base.p}, expected {p}")
    t = [base.embed(x) for x in t]
    if t[0].is_zero():
        raise ZeroLeadingScalar("t_1 must be nonzero")
    coords = kollar_coords(n)
    clash = set(coords) & set(base.ring.names)
    if clash:
        raise ValueError(f"coordinate names {sorted(clash)} clash with the ground field")
    field = base.extend(coords)
    y, z = field.gen("y"), field.gen("z")
    P = y**p - y * z ** (p - 1)
    for i, ti in enumerate(t, 1):
        P = P + field.embed(ti) * field.gen(f"x{i}") ** p
    return HypersurfaceSpec(field, coords, P, p, tuple(t), name=f"kollar(p={p}, n={n})")


def _scalars(H: HypersurfaceSpec) -> list[FieldElement]:
    if not H.scalars:
        raise ValueError("not a member of the family")
    return list(H.scalars)


def obvious_points(H: HypersurfaceSpec) -> list[ProjPoint]:
    """(0 : ... : 0 : lambda : 1) for lambda in GF(p)."""
    base = H.base
    n = len(H.coords) - 2
    return [ProjPoint.of(base, [0] * n + [lam, 1]) for lam in range(H.p)]


# -- non-smoothness --

def nonsmooth_generators(H: HypersurfaceSpec) -> list[FieldElement]:
    """All partial derivatives, in coordinate order.

    For the family these are 0 (each x_i), -z^(p-1) and y z^(p-2); that shape
    is asserted.
    """
    gens = H.partials()
    if H.scalars:
        p = H.p
        y, z = H.coord("y"), H.coord("z")
        expected = [H.field.zero()] * (len(H.coords) - 2) + [-(z ** (p - 1)), y * z ** (p - 2)]
        if gens != expected:
            raise CertificateError(
                "unexpected partials: " + ", ".join(g.format() for g in gens)
            )
    return gens


@dataclass(frozen=True)
class SupportCertificate:
    generators: tuple[FieldElement, ...]
    vanish_on_z: bool  # every generator lies in (z)
    has_z_power: bool  # some generator is a unit times z^k
    holds: bool


def nonsmooth_support_certificate(H: HypersurfaceSpec, var: str = "z") -> SupportCertificate:
    """Check that the Jacobian ideal has radical (var) on X.

    Then Sing(X/F) and X n {var = 0} have the same support.
    """
    gens = nonsmooth_generators(H)
    zp = H.field.ring.gen(var)
    vanish = all(g.num.is_zero() or zp.divides(g.num) for g in gens)
    has_power = False
    for g in gens:
        if g.is_zero() or not g.num.is_monomial():
            continue
        (e, _), = g.num.terms.items()
        i = H.field.ring.var_index(var)
        if e[i] and sum(e) == e[i] and not g.den.variables() & set(H.coords):
            has_power = True
    return SupportCertificate(tuple(gens), vanish, has_power, vanish and has_power)


# -- regularity --

def fermat_regular(t, t0=None) -> bool:
    """Regularity of t0 x_0^p + sum t_i x_i^p = 0, i.e. p-independence of the ratios.

    ``t0`` defaults to 1.  If it is zero the first nonzero t_i becomes the
    pivot; a zero coefficient anywhere makes the ratio family dependent.
    """
    t = list(t)
    if not t and t0 is None:
        raise AllZero("no coefficients")
    field = (t[0] if t else t0).field
    coeffs = [field.one() if t0 is None else field.embed(t0)] + [field.embed(x) for x in t]
    k = next((i for i, c in enumerate(coeffs) if not c.is_zero()), None)
    if k is None:
        raise AllZero("all coefficients are zero")
    ratios = [c / coeffs[k] for i, c in enumerate(coeffs) if i != k]
    if not ratios:
        return True
    return is_p_independent(ratios)


def regularity_certificate(H: HypersurfaceSpec) -> bool:
    """X is regular if its divisor z = 0, a Fermat hypersurface, is regular."""
    return fermat_regular(_scalars(H))


# -- geometric integrality --

def eisenstein_criterion(poly: MultiPoly, main_var: str, prime: MultiPoly) -> bool:
    """Eisenstein at ``prime`` for ``poly`` as a polynomial in ``main_var``.

    Leading coefficient a nonzero constant, all lower coefficients divisible by
    ``prime``, constant coefficient not divisible by prime^2.
    """
    coeffs = poly.coeffs_in(main_var)
    if not coeffs:
        return False
    top = max(coeffs)
    if top < 1 or not coeffs[top].is_constant():
        return False
    for k in range(top):
        c = coeffs.get(k)
        if c is not None and not prime.divides(c):
            return False
    c0 = coeffs.get(0)
    if c0 is None:
        return False
    return not (prime * prime).divides(c0)


@dataclass(frozen=True)
class EisensteinCertificate:
    substituted: FieldElement  # the equation in the coordinates (v, x_2, ..., y, z)
    identity_ok: bool
    eisenstein_ok: bool

    @property
    def holds(self) -> bool:
        return self.identity_ok and self.eisenstein_ok


def eisenstein_certificate(H: HypersurfaceSpec) -> EisensteinCertificate:
    """Over E = F(t_i^(1/p)) put v = y + sum u_i x_i; then the equation is v^p - y z^(p-1).

    The coordinate change replaces x_1 by v (u_1 != 0), and the result is
    Eisenstein at the prime y.
    """
    t = _scalars(H)
    p = H.p
    base = H.base
    if any(not x.is_polynomial() or x.num != base.ring.gen(g) for x, g in zip(t, base.generators)) \
            or len(t) != len(base.generators):
        raise ValueError("the certificate needs t_i to be the field generators")
    emb = root_extension(base)
    E = emb.target.extend(H.coords + ("v",))
    u = [E.embed(emb.root_of(g)) for g in base.generators]
    P = H.defining.subs({g: emb.target.gen(emb.roots[g]) ** p for g in base.generators}, E)
    y, z, v = E.gen("y"), E.gen("z"), E.gen("v")
    rest = sum((u[i] * E.gen(f"x{i + 1}") for i in range(1, len(u))), E.zero())
    x1 = (v - y - rest) / u[0]
    Q = P.subs({"x1": x1})
    identity_ok = Q == v**p - y * z ** (p - 1)
    eis = Q.den.is_constant() and eisenstein_criterion(Q.num, "v", E.ring.gen("y"))
    return EisensteinCertificate(Q, identity_ok, eis)


# -- coordinate change and cone reduction --

@dataclass(frozen=True)
class EquivalenceStep:
    source: HypersurfaceSpec
    target: HypersurfaceSpec
    lam: FieldElement
    substitution: dict  # old coordinate -> expression in new coordinates


def projective_equivalence_step(H: HypersurfaceSpec) -> EquivalenceStep:
    """If t_n / t_(n-1) = lam^p, substitute x_(n-1) -> x_(n-1) - lam x_n.

    The transformed equation is asserted to be the family member with t_n = 0.
    """
    t = _scalars(H)
    n = len(t)
    if n < 2:
        raise BadIndex("needs n >= 2")
    if t[n - 2].is_zero():
        raise DivisionByZero("t_(n-1) is zero")
    ratio = t[n - 1] / t[n - 2]
    if not ratio.is_pth_power():
        raise NotAPthPower(f"t_n/t_(n-1) = {ratio} is not a {H.p}-th power")
    lam = ratio.pth_root()
    F = H.field
    a, b = f"x{n - 1}", f"x{n}"
    sub = {a: F.gen(a) - F.embed(lam) * F.gen(b)}
    P2 = H.defining.subs(sub)
    t2 = t[:-1] + [t[0].field.zero()]
    H2 = kollar_hypersurface(H.p, n, t2)
    if P2 != H2.defining:
        raise CertificateError(f"coordinate change gave {P2}")
    return EquivalenceStep(H, H2, lam, sub)


@dataclass(frozen=True)
class ConeReduction:
    cone: HypersurfaceSpec
    base: HypersurfaceSpec
    vertex: ProjPoint


def cone_reduction(H: HypersurfaceSpec) -> ConeReduction:
    """With t_n = 0 the equation omits x_n: X is the cone over the (n-1) member."""
    t = _scalars(H)
    n = len(t)
    if n < 2 or not t[-1].is_zero():
        raise ValueError("needs n >= 2 and t_n = 0")
    if f"x{n}" in H.defining.variables():
        raise CertificateError("equation still involves x_n")
    lower = kollar_hypersurface(H.p, n - 1, t[:-1])
    if lower.defining.subs({}, H.field) != H.defining:
        raise CertificateError("cone base does not match")
    vertex = ProjPoint.of(H.base, [0] * (n - 1) + [1, 0, 0])
    if not H.contains(vertex):  # pragma: no cover
        raise CertificateError("vertex not on X")
    return ConeReduction(H, lower, vertex)


@dataclass(frozen=True)
class DescentStep:
    name: str
    holds: bool
    detail: str


def descent_ingredients(p: int, n: int) -> list[DescentStep]:
    """The constructive steps used by the induction on n (n >= 2).

    F = GF(p)(t_1, ..., t_n).  Put w = t_n / t_(n-1); then F = GF(p)(t_1, ...,
    t_(n-1), w) and the t_i stay p-independent in the new presentation.  Over
    E = F(w^(1/p)) = GF(p)(t_1, ..., t_(n-1), u) with w = u^p the ratio
    t_n / t_(n-1) is a p-th power, so the coordinate change applies, X_E is a
    cone over the (n-1) member, and t_1, ..., t_(n-1) stay p-independent in E.
    Only these ingredients are checked; no statement about all rational maps
    is computed.
    """
    if n < 2:
        raise BadIndex("descent needs n >= 2")
    steps = []
    names = [f"t{i}" for i in range(1, n + 1)]
    F = rational_function_field(p, names)
    t = F.gens()
    ex = [t[i] for i in range(n - 1)] + [t[-1] / t[-2]]
    steps.append(DescentStep("exchange", is_p_independent(ex),
                             f"{{{', '.join(str(x) for x in ex)}}} p-independent"))
    # same field presented with w in place of t_n
    G = rational_function_field(p, names[:-1] + ["w"])
    adj = adjoin_root_rank(G.gens(), n - 1)
    steps.append(DescentStep("remain_independent", adj.remaining_rank == n - 1,
                             f"rank {adj.remaining_rank} over {adj.embedding.target!r}"))
    E = adj.embedding.target
    u = adj.embedding.root_of("w")
    tE = [E.gen(g) for g in names[:-1]] + [E.gen(names[-2]) * u**p]
    H = kollar_hypersurface(p, n, tE)
    step = projective_equivalence_step(H)
    steps.append(DescentStep("projective_equivalence", step.lam == u, f"lambda = {step.lam}"))
    cone = cone_reduction(step.target)
    steps.append(DescentStep("cone", True, f"vertex {cone.vertex}"))
    steps.append(DescentStep("base_regular", fermat_regular(tE[:-1]),
                             "t_1..t_(n-1) p-independent over E"))
    return steps


# -- geometric rationality --

@dataclass(frozen=True)
class RationalityWitness:
    forward: RationalMap
    inverse: RationalMap
    pullback_zero: bool
    inverse_after_forward: bool
    forward_after_inverse: bool  # differences divisible by the equation on z = 1

    @property
    def holds(self) -> bool:
        return self.pullback_zero and self.inverse_after_forward and self.forward_after_inverse


def geometric_rationality_witness(p: int, n: int, t=None) -> RationalityWitness:
    """Birational parametrization of X over E = F(t_1^(1/p), ..., t_n^(1/p)).

    Chart z = 1, parameters (s, x_2, ..., x_n) and lam_i = t_i^(1/p):
    y = s^p, x_1 = (s - s^p - sum_(i>=2) lam_i x_i) / lam_1; inverse
    s = (y + sum lam_i x_i) / z.
    """
    H = kollar_hypersurface(p, n, t)
    base = H.base
    t = list(H.scalars)
    emb = root_extension(base)
    coords = H.coords
    params = ("s",) + coords[1:n]
    E = emb.target.extend(coords + ("s",))

    def lift(x):
        return emb(x).to_field(E)

    lam = []
    for x in t:
        y = lift(x)
        if not y.is_pth_power():  # pragma: no cover
            raise CertificateError(f"{x} has no p-th root in the extension")
        lam.append(y.pth_root())
    if lam[0].is_zero():
        raise ZeroLeadingScalar("t_1 must be nonzero")
    s = E.gen("s")
    xs = [E.gen(c) for c in coords[:n]]
    y, z = E.gen("y"), E.gen("z")
    rest = sum((lam[i] * xs[i] for i in range(1, n)), E.zero())
    x1 = (s - s**p - rest) / lam[0]
    fwd = RationalMap(E, params, coords, tuple([x1] + xs[1:] + [s**p, E.one()]),
                      homogeneous_target=True)
    lin = y + sum((lam[i] * xs[i] for i in range(n)), E.zero())
    inv = RationalMap(E, coords, params, tuple([lin / z] + [x / z for x in xs[1:]]))
    P = H.defining.subs({g: emb.target.gen(emb.roots[g]) ** p for g in base.generators}, E)
    pullback_zero = fwd.pullback(P).is_zero()
    inv_fwd = inv.compose(fwd).is_identity()
    # forward o inverse on the chart z = 1 agrees with the identity modulo P
    aff = P.subs({"z": E.one()})
    fi = fwd.compose(inv)
    ok = True
    for c, comp in zip(coords, fi.components):
        diff = (comp - E.gen(c)).subs({"z": E.one()})
        if not diff.is_zero() and not aff.num.divides(diff.num):
            ok = False
    return RationalityWitness(fwd, inv, pullback_zero, inv_fwd, ok)


# -- rational points --

def kollar_point_search(p: int, n: int, d: int, budget=None) -> list[ProjPoint]:
    return bounded_point_search(kollar_hypersurface(p, n), d, budget)


def _dense_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _dense_trim(out)


def _dense_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_frob(a, p):
    # (sum a_k t^k)^p = sum a_k t^(pk) over GF(p)
    if not a:
        return []
    out = [0] * (p * (len(a) - 1) + 1)
    for k, x in enumerate(a):
        out[p * k] = x
    return out


def _dense_add(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _dense_trim(out)


def laurent_residual(f, g, h, p: int) -> list[int]:
    """f^p - f g^(p-1) + t h^p in GF(p)[t]; polynomials as coefficient lists, low degree first."""
    f, g, h = (_dense_trim([c % p for c in x]) for x in (f, g, h))
    gp = [1]
    for _ in range(p - 1):
        gp = _dense_mul(gp, g, p)
    neg = [(-c) % p for c in _dense_mul(f, gp, p)]
    th = [0] + _dense_frob(h, p) if h else []
    return _dense_add(_dense_add(_dense_frob(f, p), neg, p), th, p)


@dataclass(frozen=True)
class LaurentReduction:
    f: list
    g: list
    h: list
    residual: list


def _univariate(poly: MultiPoly, u) -> list[int]:
    # t_i -> t^(u_i); coefficients must be in GF(p)
    F = poly.ring.field
    if F.m != 1:
        raise ValueError("needs a prime field")
    out: dict = {}
    for e, c in poly.terms.items():
        k = sum(a * b for a, b in zip(e, u))
        out[k] = (out.get(k, 0) + c) % F.p
    if not out:
        return []
    return _dense_trim([out.get(k, 0) for k in range(max(out) + 1)])


def laurent_substitution_check(point, u) -> LaurentReduction:
    """Apply t_i -> t^(u_i) to a polynomial point (h_1, ..., h_n, f, g).

    With every u_i = 1 mod p the sum of t^(u_i) h_i^p equals t h^p for
    h = sum t^((u_i - 1)/p) h_i; returns (f, g, h) and the residual
    f^p - f g^(p-1) + t h^p (zero exactly when the point lies on X).
    """
    point = point.primitive() if isinstance(point, ProjPoint) else list(point)
    u = list(u)
    n = len(point) - 2
    if len(u) != n or any(k < 1 for k in u):
        raise ValueError("one positive exponent per t_i")
    p = point[0].ring.field.p
    if any(k % p != 1 for k in u):
        raise ValueError("exponents must be 1 mod p")
    hs = [_univariate(x, u) for x in point[:n]]
    f = _univariate(point[n], u)
    g = _univariate(point[n + 1], u)
    h: list = []
    for k, hi in zip(u, hs):
        shift = (k - 1) // p
        h = _dense_add(h, [0] * shift + hi if hi else [], p)
    res = laurent_residual(f, g, h, p)
    # cross-check against the direct substitution
    direct = _dense_add(_dense_frob(f, p), [(-c) % p for c in _dense_mul(f, _dense_pow(g, p - 1, p), p)], p)
    for k, hi in zip(u, hs):
        direct = _dense_add(direct, [0] * k + _dense_frob(hi, p) if hi else [], p)
    if direct != res:  # pragma: no cover
        raise CertificateError("reduction to t h^p failed")
    return LaurentReduction(f, g, h, res)


def _dense_pow(a, k, p):
    out = [1]
    for _ in range(k):
        out = _dense_mul(out, a, p)
    return out


@dataclass(frozen=True)
class LaurentSearch:
    p: int
    degree_bound: int
    triples: int
    solutions: int
    with_h_nonzero: list


def laurent_exhaustive_search(p: int, degree_bound: int) -> LaurentSearch:
    """All (f, g, h) in GF(p)[t] of degree <= bound with f^p - f g^(p-1) + t h^p = 0."""
    polys = [_dense_trim(list(c)) for c in itertools.product(range(p), repeat=degree_bound + 1)]
    fp = [_dense_frob(f, p) for f in polys]
    gpow = [_dense_pow(g, p - 1, p) for g in polys]
    thp = [[0] + _dense_frob(h, p) if h else [] for h in polys]
    solutions = 0
    bad = []
    for i, f in enumerate(polys):
        for j in range(len(polys)):
            lhs = _dense_add(fp[i], [(-c) % p for c in _dense_mul(f, gpow[j], p)], p)
            target = [(-c) % p for c in lhs]
            # need t h^p == -(f^p - f g^(p-1))
            for k, th in enumerate(thp):
                if th == target:
                    solutions += 1
                    if polys[k]:
                        bad.append((f, polys[j], polys[k]))
    n = len(polys) ** 3
    return LaurentSearch(p, degree_bound, n, solutions, bad)
