"""Projective hypersurfaces over F = GF(p^m)(t_1, ..., t_n), points and maps."""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass

import numpy as np

from charp.errors import AllZero, BudgetExceeded, ConfigError, MixedFields
from charp.exactfield.gcd import multipoly_gcd, multipoly_lcm
from charp.exactfield.multipoly import MultiPoly
from charp.exactfield.ratfunc import FieldElement, FractionField

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "CHARP_POINT_BUDGET"


@dataclass(frozen=True)
class HypersurfaceSpec:
    """V(defining) in P^N over ``field.base()``; coordinates are the ring's non-generators."""

    field: FractionField
    coords: tuple[str, ...]
    defining: FieldElement
    degree: int
    scalars: tuple = ()  # the t_i of a named family, if any
    name: str = ""

    def __post_init__(self):
        if self.defining.is_zero():
            raise ValueError("defining polynomial is zero")
        if self.defining.field is not self.field:
            raise MixedFields("defining polynomial lives in another field")
        if self.defining.den.variables() & set(self.coords):
            raise ValueError("defining polynomial must be polynomial in the coordinates")
        if not self.defining.num.is_homogeneous(self.coords):
            raise ValueError("defining polynomial is not homogeneous")
        if self.defining.num.degree_in(self.coords) != self.degree:
            raise ValueError("degree mismatch")

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def base(self) -> FractionField:
        return self.field.base()

    def coord(self, name: str) -> FieldElement:
        return self.field.gen(name)

    def partials(self) -> list[FieldElement]:
        return [self.defining.derivative(c) for c in self.coords]

    def evaluate(self, values) -> FieldElement:
        """Value of the defining polynomial at a tuple of base-field scalars."""
        return self.defining.subs(dict(zip(self.coords, values)), self.base)

    def contains(self, point: "ProjPoint") -> bool:
        return self.evaluate(point.coords).is_zero()

    def __str__(self):
        return f"V({self.defining.format()}) in P^{len(self.coords) - 1}"


def clear_denominators(values) -> list[MultiPoly]:
    """Scale a tuple of fractions to a gcd-free polynomial tuple (projectively equal)."""
    values = list(values)
    ring = values[0].field.ring
    den = ring.one()
    for v in values:
        if not v.den.is_one():
            den = multipoly_lcm(den, v.den)
    polys = [v.num * den.exact_div(v.den) for v in values]
    g = ring.zero()
    for q in polys:
        g = multipoly_gcd(g, q)
    if g.is_zero():
        raise AllZero("all coordinates are zero")
    polys = [q.exact_div(g) for q in polys]
    lead = next(q for q in polys if not q.is_zero())
    inv = ring.field.inv(lead.leading_code())
    return [q.scale(inv) for q in polys]


class ProjPoint:
    """Homogeneous coordinates over a field, compared up to a common scalar.

    ``coords`` is normalized so that the first nonzero entry is 1.
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(coords)
        if not coords:
            raise ValueError("empty point")
        field = coords[0].field
        for c in coords:
            if c.field is not field:
                raise MixedFields("coordinates in different fields")
        pivot = next((c for c in coords if not c.is_zero()), None)
        if pivot is None:
            raise AllZero("all coordinates are zero")
        self.coords = tuple(c / pivot for c in coords)

    @classmethod
    def of(cls, field: FractionField, values) -> ProjPoint:
        return cls([field.embed(v) for v in values])

    @property
    def field(self) -> FractionField:
        return self.coords[0].field

    def primitive(self) -> list[MultiPoly]:
        """Polynomial representative with gcd 1 and monic first nonzero entry."""
        return clear_denominators(self.coords)

    def sort_key(self):
        return tuple(q.format() for q in self.primitive())

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __len__(self):
        return len(self.coords)

    def __str__(self):
        return "(" + ":".join(c.format() for c in self.coords) + ")"

    def __repr__(self):
        return f"ProjPoint{self}"


@dataclass(frozen=True)
class RationalMap:
    """Components in the variables ``source`` with values for the names ``target``.

    Homogeneous sources must have degree-0 components; everything lives in one
    fraction field that contains both variable sets.
    """

    field: FractionField
    source: tuple[str, ...]
    target: tuple[str, ...]
    components: tuple[FieldElement, ...]
    homogeneous_target: bool = False

    def __post_init__(self):
        if len(self.components) != len(self.target):
            raise ValueError("one component per target variable")
        for c in self.components:
            if c.den.is_zero():  # pragma: no cover
                raise ValueError("undefined component")
            extra = c.variables() & set(self.field.coordinates) - set(self.source)
            if extra:
                raise ValueError(f"component uses non-source variables {sorted(extra)}")

    @property
    def source_dim(self) -> int:
        return len(self.source)

    @property
    def target_dim(self) -> int:
        return len(self.target) - (1 if self.homogeneous_target else 0)

    def pullback(self, f: FieldElement) -> FieldElement:
        return f.subs(dict(zip(self.target, self.components)))

    def compose(self, inner: RationalMap) -> RationalMap:
        """self o inner."""
        if tuple(inner.target) != tuple(self.source):
            raise ValueError("target of inner map does not match source")
        comps = tuple(inner.pullback(c) for c in self.components)
        return RationalMap(self.field, inner.source, self.target, comps, self.homogeneous_target)

    def is_identity(self) -> bool:
        if tuple(self.source) != tuple(self.target):
            return False
        return all(c == self.field.gen(v) for c, v in zip(self.components, self.source))

    def __str__(self):
        pairs = ", ".join(f"{v} = {c}" for v, c in zip(self.target, self.components))
        return f"({', '.join(self.source)}) -> ({pairs})"


# -- bounded point search --

def point_budget(budget=None) -> int:
    if budget is not None:
        b = int(budget)
    else:
        env = os.environ.get(BUDGET_ENV)
        try:
            b = int(env) if env else DEFAULT_BUDGET
        except ValueError:
            raise ConfigError(f"{BUDGET_ENV}={env!r} is not an integer") from None
    if b <= 0:
        raise ConfigError("budget must be positive")
    return b


def bounded_polys(base: FractionField, d: int) -> list[MultiPoly]:
    """All polynomials in the generators of total degree <= d, coefficients in GF(q)."""
    ring = base.ring
    nvars = ring.nvars
    exps = [e for e in itertools.product(range(d + 1), repeat=nvars) if sum(e) <= d]
    q = ring.field.q
    out = []
    for coeffs in itertools.product(range(q), repeat=len(exps)):
        out.append(MultiPoly(ring, {e: c for e, c in zip(exps, coeffs) if c}))
    return out


def search_size(H: HypersurfaceSpec, d: int) -> int:
    base = H.base
    c = math.comb(d + len(base.generators), d)
    return base.gf.q ** (len(H.coords) * c)


def bounded_point_search(H: HypersurfaceSpec, d: int, budget=None,
                         prefilter: bool = True) -> list[ProjPoint]:
    """Points of H whose primitive coordinates are polynomials of degree <= d.

    Enumerates every tuple once, keeps tuples that are canonical (first nonzero
    entry has leading coefficient 1, coordinates coprime) and satisfy the
    equation.  Result is sorted by the printed primitive representative.
    Over prime fields a vectorized pre-filter discards tuples that fail at
    some point of GF(p)^n before the exact check.
    """
    if d < 0:
        raise ConfigError("degree bound must be >= 0")
    size = search_size(H, d)
    limit = point_budget(budget)
    if size > limit:
        raise BudgetExceeded(f"{size} candidate tuples exceed budget {limit}")
    base = H.base
    ring = base.ring
    polys = bounded_polys(base, d)
    # equation as {coordinate exponent: coefficient polynomial in t}
    num = H.defining.num
    gen_names = tuple(n for n in num.ring.names if n not in H.coords)
    split = num.coeffs_in_vars(H.coords)
    terms = [(e, c.to_ring(ring) if gen_names else c) for e, c in split.items()]
    maxdeg = [max(e[i] for e, _ in terms) for i in range(len(H.coords))]
    pw = [[None] * (maxdeg[i] + 1) for i in range(len(H.coords))]

    def power(i, idx, k):
        cache = pw[i][k]
        if cache is None:
            cache = pw[i][k] = {}
        v = cache.get(idx)
        if v is None:
            v = cache[idx] = polys[idx] ** k
        return v

    found = []
    npolys = len(polys)
    ncoords = len(H.coords)
    if prefilter and ring.field.m == 1:
        candidates = _prime_field_filter(polys, terms, ring, ncoords)
    else:
        candidates = itertools.product(range(npolys), repeat=ncoords)
    for combo in candidates:
        lead = next((polys[i] for i in combo if not polys[i].is_zero()), None)
        if lead is None or lead.leading_code() != 1:
            continue
        total = ring.zero()
        for e, c in terms:
            term = c
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, combo[i], k)
                    if term.is_zero():
                        break
            total = total + term
        if not total.is_zero():
            continue
        g = ring.zero()
        for i in combo:
            g = multipoly_gcd(g, polys[i])
        if not g.is_one():
            continue
        found.append(ProjPoint([base(polys[i]) for i in combo]))
    found.sort(key=ProjPoint.sort_key)
    return found


def _values_at(poly: MultiPoly, points, p: int) -> np.ndarray:
    """Values of a GF(p)-polynomial at integer points (codes are residues when m = 1)."""
    out = np.zeros(len(points), dtype=np.int64)
    for j, pt in enumerate(points):
        v = 0
        for e, c in poly.terms.items():
            term = c
            for x, k in zip(pt, e):
                if k:
                    term = term * pow(x, k, p) % p
            v += term
        out[j] = v % p
    return out


def _prime_field_filter(polys, terms, ring, ncoords):
    """Index tuples whose equation vanishes at every point of GF(p)^n.

    A necessary condition for vanishing identically; survivors still get the
    exact check.  Vectorized over all tuples sharing the first coordinate.
    """
    p = ring.field.p
    points = list(itertools.product(range(p), repeat=ring.nvars))
    vals = np.stack([_values_at(f, points, p) for f in polys])  # (npolys, npts)
    npolys, npts = vals.shape
    coeff_vals = [(e, _values_at(c, points, p)) for e, c in terms]
    maxdeg = max(max(e) for e, _ in terms)
    powers = [np.ones_like(vals)]
    for _ in range(maxdeg):
        powers.append(powers[-1] * vals % p)
    rest = ncoords - 1
    for first in range(npolys):
        total = np.zeros((npolys,) * rest + (npts,), dtype=np.int64)
        for e, cv in coeff_vals:
            term = cv * powers[e[0]][first] % p
            term = np.broadcast_to(term, total.shape)
            for k in range(rest):
                shape = [1] * rest + [npts]
                shape[k] = npolys
                term = term * powers[e[k + 1]].reshape(shape) % p
            total = (total + term) % p
        hits = np.argwhere(~total.any(axis=-1))
        for idx in hits:
            yield (first,) + tuple(int(i) for i in idx)
