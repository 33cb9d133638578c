"""Rational function fields GF(p^m)(t_1, ..., t_n) and their elements."""

from __future__ import annotations

import functools

from charp.errors import DivisionByZero, MixedFields, NotAPthPower, UnknownVariable
from charp.exactfield.galois import GF, GaloisField
from charp.exactfield.gcd import multipoly_gcd
from charp.exactfield.multipoly import MultiPoly, PolyRing, poly_ring


class FractionField:
    """Fraction field of a :class:`PolyRing`.

    ``generators`` names the variables that count as transcendental
    generators of the ground field (the basis dt_i of the differentials);
    the remaining ring variables are coordinates.  By default every ring
    variable is a generator.
    """

    def __init__(self, ring: PolyRing, generators: tuple[str, ...] | None = None):
        self.ring = ring
        self.generators = ring.names if generators is None else tuple(generators)
        for g in self.generators:
            ring.var_index(g)
        self.coordinates = tuple(n for n in ring.names if n not in self.generators)

    def __repr__(self):
        gens = ", ".join(self.generators)
        base = f"{self.ring.field!r}({gens})"
        if self.coordinates:
            return f"{base}[{', '.join(self.coordinates)}]"
        return base

    def __reduce__(self):
        return (fraction_field, (self.ring, self.generators))

    @property
    def characteristic(self) -> int:
        return self.ring.field.p

    @property
    def p(self) -> int:
        return self.ring.field.p

    @property
    def gf(self) -> GaloisField:
        return self.ring.field

    def __call__(self, num, den=None) -> FieldElement:
        num = self._poly(num)
        den = self.ring.one() if den is None else self._poly(den)
        return FieldElement(self, num, den)

    def _poly(self, x) -> MultiPoly:
        if isinstance(x, MultiPoly):
            return x.to_ring(self.ring)
        return self.ring.const(x)

    def zero(self) -> FieldElement:
        return FieldElement(self, self.ring.zero(), self.ring.one(), _canonical=True)

    def one(self) -> FieldElement:
        return FieldElement(self, self.ring.one(), self.ring.one(), _canonical=True)

    def const(self, c) -> FieldElement:
        return FieldElement(self, self.ring.const(c), self.ring.one(), _canonical=True)

    def const_code(self, code: int) -> FieldElement:
        return FieldElement(self, self.ring.const_code(code), self.ring.one(), _canonical=True)

    def gen(self, name: str) -> FieldElement:
        return FieldElement(self, self.ring.gen(name), self.ring.one(), _canonical=True)

    def gens(self) -> list[FieldElement]:
        return [self.gen(n) for n in self.generators]

    def extend(self, coordinates) -> FractionField:
        """Same ground field, with extra coordinate variables appended."""
        return fraction_field(self.ring.extend(tuple(coordinates)), self.generators)

    def base(self) -> FractionField:
        """The ground field: drop all coordinate variables."""
        return fraction_field(poly_ring(self.ring.field, self.generators), self.generators)

    def embed(self, x) -> FieldElement:
        """Move an element of a smaller field into this one by variable name."""
        if isinstance(x, FieldElement):
            if x.field is self:
                return x
            if x.field.ring.field is not self.ring.field:
                raise MixedFields(f"cannot embed {x.field!r} into {self!r}")
            return FieldElement(self, x.num.to_ring(self.ring), x.den.to_ring(self.ring),
                                _canonical=True)
        if isinstance(x, MultiPoly):
            return self(x)
        return self.const(x)


@functools.lru_cache(maxsize=None)
def fraction_field(ring: PolyRing, generators: tuple[str, ...] | None = None) -> FractionField:
    return FractionField(ring, generators)


def rational_function_field(p: int, names, m: int = 1, gen_name: str = "a",
                            coordinates=()) -> FractionField:
    """GF(p^m)(names) with optional coordinate variables."""
    names = tuple(names)
    ring = poly_ring(GF(p, m, gen_name), names + tuple(coordinates))
    return fraction_field(ring, names)


class FieldElement:
    """num/den in lowest terms with den monic (grlex)."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: FractionField, num: MultiPoly, den: MultiPoly,
                 _canonical: bool = False):
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        self.field = field
        self._hash = None
        if _canonical:
            self.num, self.den = num, den
            return
        if num.is_zero():
            self.num, self.den = num, field.ring.one()
            return
        if not den.is_constant():
            g = multipoly_gcd(num, den)
            if not g.is_one():
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.leading_code()
        if lc != 1:
            inv = field.ring.field.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    # -- coercion --
    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise MixedFields(f"{self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, MultiPoly):
            if other.ring is not self.field.ring:
                raise MixedFields(f"{self.field!r} vs {other.ring!r}")
            return FieldElement(self.field, other, self.field.ring.one(), _canonical=True)
        if isinstance(other, int) or hasattr(other, "code"):
            return self.field.const(other)
        return NotImplemented

    def _make(self, num, den, canonical=False):
        return FieldElement(self.field, num, den, _canonical=canonical)

    # -- predicates --
    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.is_constant()

    def variables(self) -> set[str]:
        return self.num.variables() | self.den.variables()

    # -- arithmetic --
    def __eq__(self, other):
        o = other if isinstance(other, FieldElement) else self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.field is not self.field:
            return False
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return self._make(-self.num, self.den, True)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        a, b, c, d = self.num, self.den, o.num, o.den
        if b == d:
            return self._make(a + c, b)
        if b.is_one():
            return self._make(a * d + c, d, True)
        if d.is_one():
            return self._make(a + c * b, b, True)
        g = multipoly_gcd(b, d)
        if g.is_one():
            # lowest terms are preserved when the denominators are coprime
            return self._make(a * d + b * c, b * d, True)
        b1, d1 = b.exact_div(g), d.exact_div(g)
        return self._make(a * d1 + c * b1, b1 * d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.num, self.den, o.num, o.den
        if a.is_zero() or c.is_zero():
            return self.field.zero()
        if b.is_one() and d.is_one():
            return self._make(a * c, b, True)
        g1 = multipoly_gcd(a, d) if not d.is_one() else None
        g2 = multipoly_gcd(c, b) if not b.is_one() else None
        if g1 is not None and not g1.is_one():
            a, d = a.exact_div(g1), d.exact_div(g1)
        if g2 is not None and not g2.is_one():
            c, b = c.exact_div(g2), b.exact_div(g2)
        num, den = a * c, b * d
        lc = den.leading_code()
        if lc != 1:
            inv = self.field.ring.field.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        return self._make(num, den, True)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        num, den = self.den, self.num
        lc = den.leading_code()
        if lc != 1:
            inv = self.field.ring.field.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        return self._make(num, den, True)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        # a power of a reduced fraction stays reduced; den^n stays monic
        return self._make(self.num**n, self.den**n, True)

    # -- calculus --
    def derivative(self, var: str) -> FieldElement:
        """Partial derivative by the quotient rule."""
        self.field.ring.var_index(var)
        da = self.num.derivative(var)
        db = self.den.derivative(var)
        if db.is_zero():
            return self._make(da, self.den)
        return self._make(da * self.den - self.num * db, self.den * self.den)

    def is_pth_power(self) -> bool:
        """True iff every partial derivative vanishes, i.e. self lies in F^p."""
        return all(self.derivative(v).is_zero() for v in self.field.ring.names)

    def pth_root(self) -> FieldElement:
        p = self.field.p
        poly = self.num * self.den ** (p - 1)
        if not poly.is_pth_power():
            raise NotAPthPower(f"{self.format()} is not a {p}-th power")
        return self._make(poly.pth_root(), self.den)

    # -- substitution --
    def subs(self, mapping: dict, target: FractionField | None = None) -> FieldElement:
        """Apply the substitution var -> image (FieldElement, poly or int).

        Unmapped variables keep their name in ``target`` (default self.field).
        """
        target = target or self.field
        images = []
        for n in self.field.ring.names:
            if n in mapping:
                images.append(target.embed(mapping[n]))
            elif n in target.ring.index:
                images.append(None)
            else:
                if n in self.variables():
                    raise UnknownVariable(f"no image for {n!r} in {target!r}")
                images.append(None)
        num = _eval_poly(self.num, images, target)
        den = _eval_poly(self.den, images, target)
        return num / den

    def to_field(self, target: FractionField) -> FieldElement:
        return target.embed(self)

    # -- printing --
    def format(self) -> str:
        n = self.num.format()
        if self.den.is_one():
            return n
        if " " in n:
            n = f"({n})"
        d = self.den.format()
        if len(self.den) > 1 or len(self.den.variables()) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"FieldElement({self.format()!r})"


def _eval_poly(poly: MultiPoly, images: list, target: FractionField) -> FieldElement:
    """Evaluate ``poly`` with per-variable images (None = same-named variable).

    Works over a common denominator so only one gcd reduction happens.
    """
    ring = target.ring
    nvars = poly.ring.nvars
    names = poly.ring.names
    maxdeg = [0] * nvars
    for e in poly.terms:
        for i, k in enumerate(e):
            if k > maxdeg[i]:
                maxdeg[i] = k
    nums: list = [None] * nvars
    dens: list = [None] * nvars
    for i in range(nvars):
        if maxdeg[i] == 0:
            continue
        if images[i] is None:
            nums[i], dens[i] = ring.gen(names[i]), ring.one()
        else:
            nums[i], dens[i] = images[i].num, images[i].den
    npow: dict = {}
    dpow: dict = {}

    def pw(cache, base, i, k):
        key = (i, k)
        if key not in cache:
            cache[key] = base[i] ** k
        return cache[key]

    total = ring.zero()
    for e, c in poly.terms.items():
        term = ring.const_code(c)
        for i in range(nvars):
            if maxdeg[i] == 0:
                continue
            k = e[i]
            if k:
                term = term * pw(npow, nums, i, k)
            if not dens[i].is_one() and maxdeg[i] - k:
                term = term * pw(dpow, dens, i, maxdeg[i] - k)
        total = total + term
    den = ring.one()
    for i in range(nvars):
        if maxdeg[i] and not dens[i].is_one():
            den = den * pw(dpow, dens, i, maxdeg[i])
    return FieldElement(target, total, den)
