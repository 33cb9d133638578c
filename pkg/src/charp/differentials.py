"""Absolute Kähler differentials of F = GF(p^m)(t_1, ..., t_n).

With the declared presentation the dt_i form a basis of the differentials,
so the span of df_1, ..., df_r is the row space of the Jacobian
(d f_j / d t_i) over F.  Everything here reduces to exact ranks of such
matrices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from charp.errors import MixedFields, NotPIndependent, ZeroDivisor
from charp.exactfield.gcd import multipoly_lcm
from charp.exactfield.multipoly import MultiPoly, poly_ring
from charp.exactfield.ratfunc import FieldElement, FractionField, fraction_field


@dataclass(frozen=True)
class DifferentialSpan:
    elements: tuple[FieldElement, ...]
    generators: tuple[str, ...]
    jacobian: tuple[tuple[FieldElement, ...], ...]
    rank: int

    @property
    def is_p_independent(self) -> bool:
        return self.rank == len(self.elements)


def _common_field(elems) -> FractionField:
    elems = list(elems)
    if not elems:
        raise ValueError("empty family has no field; pass field= explicitly")
    field = elems[0].field
    for f in elems[1:]:
        if f.field is not field:
            raise MixedFields(f"{f.field!r} vs {field!r}")
    return field


def jacobian(elems, generators=None) -> list[list[FieldElement]]:
    """Rows d f_j / d t_i."""
    elems = list(elems)
    if not elems:
        return []
    field = _common_field(elems)
    gens = field.generators if generators is None else tuple(generators)
    return [[f.derivative(g) for g in gens] for f in elems]


def _clear_row(row: list[FieldElement]) -> list[MultiPoly]:
    den = row[0].field.ring.one()
    for x in row:
        if not x.den.is_one():
            den = multipoly_lcm(den, x.den)
    return [x.num * den.exact_div(x.den) for x in row]


def matrix_rank(rows: list[list[FieldElement]]) -> int:
    """Rank over F by fraction-free (Bareiss) elimination.

    Each row is first scaled by the lcm of its denominators, which does not
    change the rank.  Pivot: first nonzero entry in column order.
    """
    rows = [r for r in rows if r]
    if not rows:
        return 0
    M = [_clear_row(r) for r in rows]
    ring = M[0][0].ring
    nrows, ncols = len(M), len(M[0])
    prev = ring.one()
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if not M[r][c].is_zero()), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        pv = M[rank][c]
        for r in range(rank + 1, nrows):
            a = M[r][c]
            for k in range(c + 1, ncols):
                v = pv * M[r][k]
                if not a.is_zero():
                    v = v - a * M[rank][k]
                M[r][k] = v if prev.is_one() else v.exact_div(prev)
            M[r][c] = ring.zero()
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def differential_span(elems, generators=None) -> DifferentialSpan:
    elems = tuple(elems)
    if not elems:
        return DifferentialSpan((), tuple(generators or ()), (), 0)
    field = _common_field(elems)
    gens = field.generators if generators is None else tuple(generators)
    J = jacobian(elems, gens)
    return DifferentialSpan(elems, gens, tuple(tuple(r) for r in J), matrix_rank(J))


def p_independence_rank(elems, generators=None) -> int:
    """dim_F of the span of the df_j."""
    elems = list(elems)
    if not elems:
        return 0
    return differential_span(elems, generators).rank


def is_p_independent(elems, generators=None) -> bool:
    elems = list(elems)
    return p_independence_rank(elems, generators) == len(elems)


def exchange_step(elems, i: int, j: int) -> list[FieldElement]:
    """Replace elems[i] by elems[i] / elems[j]; the result must stay p-independent."""
    elems = list(elems)
    if not is_p_independent(elems):
        raise NotPIndependent("input family is not p-independent")
    if elems[j].is_zero():
        raise ZeroDivisor(f"element {j} is zero")
    out = list(elems)
    out[i] = elems[i] / elems[j]
    if not is_p_independent(out):
        raise NotPIndependent(f"exchanging {i} by {j} loses p-independence")
    return out


# -- purely inseparable extensions by renaming generators --

def _root_name(name: str, taken) -> str:
    cand = "u" + name[1:] if name.startswith("t") and name[1:].isdigit() else name + "_root"
    while cand in taken:
        cand += "_"
    return cand


@dataclass(frozen=True)
class RootEmbedding:
    """F -> E = F(g^{1/p} : g in rooted) presented as GF(p^m)(u ...) with g = u^p."""

    source: FractionField
    target: FractionField
    roots: dict  # generator name -> new variable name

    def __call__(self, f: FieldElement) -> FieldElement:
        f = self.source.embed(f)
        p = self.source.p
        return f.subs({g: self.target.gen(u) ** p for g, u in self.roots.items()}, self.target)

    def root_of(self, g: str) -> FieldElement:
        return self.target.gen(self.roots[g])


def root_extension(field: FractionField, rooted=None) -> RootEmbedding:
    """Adjoin p-th roots of the named generators (default: all of them)."""
    rooted = tuple(field.generators if rooted is None else rooted)
    for g in rooted:
        if g not in field.generators:
            raise ValueError(f"{g!r} is not a generator of {field!r}")
    taken = set(field.ring.names)
    roots = {}
    for g in rooted:
        roots[g] = _root_name(g, taken)
        taken.add(roots[g])
    names = tuple(roots.get(n, n) for n in field.ring.names)
    gens = tuple(roots.get(n, n) for n in field.generators)
    target = fraction_field(poly_ring(field.ring.field, names), gens)
    return RootEmbedding(field, target, roots)


@dataclass(frozen=True)
class RootAdjunction:
    embedding: RootEmbedding
    remaining_rank: int
    relative_dim: int  # dim_E of the differentials of E over F
    imperfection_dim: int  # dim_E of the module of imperfection


def _generator_of(f: FieldElement) -> str | None:
    if f.den.is_one() and f.num.is_monomial() and f.num.leading_code() == 1:
        (e, _), = f.num.terms.items()
        if sum(e) == 1:
            name = f.field.ring.names[e.index(1)]
            if name in f.field.generators:
                return name
    return None


def adjoin_root_rank(elems, root_of: int) -> RootAdjunction:
    """Adjoin the p-th root of elems[root_of] and measure what survives.

    elems[root_of] must be one of the declared generators t_k, so that
    E = F(t_k^{1/p}) is again a rational function field (t_k = u_k^p).
    """
    elems = list(elems)
    if not is_p_independent(elems):
        raise NotPIndependent("family is not p-independent")
    field = elems[0].field
    g = _generator_of(elems[root_of])
    if g is None:
        raise ValueError("only roots of declared generators are representable")
    emb = root_extension(field, [g])
    rest = [emb(f) for j, f in enumerate(elems) if j != root_of]
    remaining = p_independence_rank(rest) if rest else 0
    # image of the basis dt_1..dt_N of F inside the differentials of E
    images = [emb(field.gen(h)) for h in field.generators]
    img_rank = p_independence_rank(images)
    n = len(field.generators)
    relative = n - img_rank
    imperfection = n - img_rank
    # Cartier: dim(relative) = trdeg_F(E) + dim(imperfection), trdeg = 0 here
    if relative != 1 or imperfection != 1:
        raise AssertionError(f"expected one-dimensional relative differentials, got {relative}")
    return RootAdjunction(emb, remaining, relative, imperfection)


# -- coordinates over F^p --

def pbasis_coordinates(f: FieldElement) -> dict[tuple[int, ...], FieldElement]:
    """Write f = sum_e t^e c_e^p with 0 <= e_i < p over all ring variables."""
    field = f.field
    p = field.p
    ring = field.ring
    poly = f.num * f.den ** (p - 1)
    groups: dict = {}
    for e, c in poly.terms.items():
        r = tuple(k % p for k in e)
        groups.setdefault(r, {})[tuple(k - rk for k, rk in zip(e, r))] = c
    out = {}
    for r, terms in groups.items():
        root = MultiPoly(ring, terms).pth_root()
        out[r] = FieldElement(field, root, f.den)
    return out


def _solve_linear(A: list[list[FieldElement]], b: list[FieldElement], field: FractionField):
    """One solution of A x = b over F, or None."""
    rows = [list(r) + [bi] for r, bi in zip(A, b)]
    ncols = len(A[0]) if A else 0
    pivots = []
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if not rows[r][c].is_zero()), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][c].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][c].is_zero():
                fac = rows[r][c]
                rows[r] = [x - fac * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(c)
        rank += 1
    for r in range(rank, len(rows)):
        if not rows[r][-1].is_zero():
            return None
    x = [field.zero()] * ncols
    for r, c in enumerate(pivots):
        x[c] = rows[r][-1]
    return x


def pth_power_in_root_extension(target: FieldElement, radicand: FieldElement):
    """Decide whether ``target`` is a p-th power in F(radicand^{1/p}).

    Returns b_0..b_{p-1} with sum_j b_j^p radicand^j == target (so that
    (sum_j b_j theta^j)^p == target for theta^p = radicand), or None.
    """
    field = _common_field([target, radicand])
    p = field.p
    powers = [radicand**j for j in range(p)]
    coords = [pbasis_coordinates(x) for x in powers]
    tc = pbasis_coordinates(target)
    keys = sorted(set(tc).union(*coords))
    zero = field.zero()
    A = [[coords[j].get(k, zero) for j in range(p)] for k in keys]
    b = [tc.get(k, zero) for k in keys]
    sol = _solve_linear(A, b, field)
    if sol is None:
        return None
    check = zero
    for bj, rj in zip(sol, powers):
        check = check + bj**p * rj
    if check != target:  # pragma: no cover
        raise AssertionError("p-basis solution failed verification")
    return sol


def monomial_certificates(elems) -> list[FieldElement]:
    """The monomials prod f_i^{d_i}, 0 <= d_i < p, used as the F^p-basis test."""
    elems = list(elems)
    field = _common_field(elems)
    out = []
    for ds in itertools.product(range(field.p), repeat=len(elems)):
        m = field.one()
        for f, d in zip(elems, ds):
            m = m * f**d
        out.append(m)
    return out


def linearly_independent_over_pth_powers(elems) -> bool:
    """True iff the given elements are linearly independent over F^p.

    Uses the p-basis coordinates: a relation sum c_j^p f_j = 0 is the same as
    sum c_j (f_j)_e = 0 for every p-basis index e.
    """
    elems = list(elems)
    field = _common_field(elems)
    coords = [pbasis_coordinates(f) for f in elems]
    keys = sorted(set().union(*coords))
    zero = field.zero()
    # rows = elements, columns = coordinates; independence <=> full row rank
    rows = [[c.get(k, zero) for k in keys] for c in coords]
    return matrix_rank(rows) == len(elems)
