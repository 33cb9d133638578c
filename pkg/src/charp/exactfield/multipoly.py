"""Sparse multivariate polynomials over GF(p^m).

A polynomial is a dict mapping exponent tuples to nonzero coefficient codes
(see :mod:`charp.exactfield.galois`).  Terms are ordered graded
lexicographically with the ring's declared variable order; "monic" and
"leading" always refer to that order.
"""

from __future__ import annotations

import functools
from operator import add as _add

from charp.errors import DivisionByZero, MixedFields, NotAPthPower, UnknownVariable
from charp.exactfield.galois import GaloisField


def grlex_key(e: tuple[int, ...]):
    return (sum(e), e)


class PolyRing:
    """GF(p^m)[names].  Use :func:`poly_ring` to get the cached instance."""

    def __init__(self, field: GaloisField, names: tuple[str, ...]):
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.field = field
        self.names = tuple(names)
        self.nvars = len(names)
        self.index = {n: i for i, n in enumerate(names)}
        self._zero_exp = (0,) * self.nvars

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.names)}]"

    def __reduce__(self):
        return (poly_ring, (self.field, self.names))

    @property
    def characteristic(self) -> int:
        return self.field.p

    def var_index(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownVariable(f"unknown variable {name!r} in {self!r}") from None

    def zero(self) -> MultiPoly:
        return MultiPoly(self, {})

    def one(self) -> MultiPoly:
        return self.const(1)

    def const(self, c) -> MultiPoly:
        if hasattr(c, "code"):
            code = c.code
        else:
            code = self.field.from_int(c)
        return MultiPoly(self, {self._zero_exp: code} if code else {})

    def const_code(self, code: int) -> MultiPoly:
        return MultiPoly(self, {self._zero_exp: code} if code else {})

    def gen(self, name: str) -> MultiPoly:
        i = self.var_index(name)
        e = [0] * self.nvars
        e[i] = 1
        return MultiPoly(self, {tuple(e): 1})

    def gens(self) -> list[MultiPoly]:
        return [self.gen(n) for n in self.names]

    def monomial(self, exps: dict[str, int] | tuple[int, ...], code: int = 1) -> MultiPoly:
        if isinstance(exps, dict):
            e = [0] * self.nvars
            for n, k in exps.items():
                e[self.var_index(n)] = k
            exps = tuple(e)
        return MultiPoly(self, {tuple(exps): code} if code else {})

    def extend(self, names) -> PolyRing:
        extra = [n for n in names if n not in self.index]
        return poly_ring(self.field, self.names + tuple(extra))


@functools.lru_cache(maxsize=None)
def poly_ring(field: GaloisField, names: tuple[str, ...]) -> PolyRing:
    return PolyRing(field, tuple(names))


class MultiPoly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict, _trusted: bool = False):
        if not _trusted:
            q, n = ring.field.q, ring.nvars
            clean = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n or min(e, default=0) < 0:
                    raise ValueError(f"bad exponent vector {e} for {ring!r}")
                if not 0 <= c < q:
                    raise ValueError(f"coefficient code {c} out of range for GF({q})")
                if c:
                    clean[e] = c
            terms = clean
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- construction helpers --
    def _new(self, terms):
        return MultiPoly(self.ring, terms, True)

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.ring is not self.ring:
                raise MixedFields(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, int) or hasattr(other, "code"):
            return self.ring.const(other)
        return NotImplemented

    # -- predicates / accessors --
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def constant_code(self) -> int:
        return self.terms.get(self.ring._zero_exp, 0)

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get(self.ring._zero_exp) == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __len__(self):
        return len(self.terms)

    def degree(self, var: str | None = None) -> float | int:
        """Total degree, or degree in ``var``.  The zero polynomial has degree -inf."""
        if not self.terms:
            return float("-inf")
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.ring.var_index(var)
        return max(e[i] for e in self.terms)

    def degree_in(self, names) -> float | int:
        if not self.terms:
            return float("-inf")
        idx = [self.ring.var_index(n) for n in names]
        return max(sum(e[i] for i in idx) for e in self.terms)

    def min_degree(self, var: str) -> int:
        i = self.ring.var_index(var)
        return min(e[i] for e in self.terms) if self.terms else 0

    def variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(self.ring.names[i])
        return used

    def _var_mask(self) -> list[bool]:
        mask = [False] * self.ring.nvars
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    mask[i] = True
        return mask

    def leading_exponent(self) -> tuple[int, ...]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=grlex_key)

    def leading_code(self) -> int:
        return self.terms[self.leading_exponent()] if self.terms else 0

    def monic(self) -> MultiPoly:
        if not self.terms:
            return self
        lc = self.leading_code()
        if lc == 1:
            return self
        return self.scale(self.ring.field.inv(lc))

    def is_homogeneous(self, names=None) -> bool:
        if not self.terms:
            return True
        if names is None:
            degs = {sum(e) for e in self.terms}
        else:
            idx = [self.ring.var_index(n) for n in names]
            degs = {sum(e[i] for i in idx) for e in self.terms}
        return len(degs) == 1

    def coefficient(self, exps: dict[str, int]) -> int:
        e = [0] * self.ring.nvars
        for n, k in exps.items():
            e[self.ring.var_index(n)] = k
        return self.terms.get(tuple(e), 0)

    # -- ring operations --
    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring is other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    def __neg__(self):
        F = self.ring.field
        return self._new({e: F.neg(c) for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        F = self.ring.field
        res = dict(self.terms)
        if F.m == 1:
            p = F.p
            for e, c in other.terms.items():
                v = (res.get(e, 0) + c) % p
                if v:
                    res[e] = v
                else:
                    res.pop(e, None)
        else:
            for e, c in other.terms.items():
                v = F.add(res.get(e, 0), c)
                if v:
                    res[e] = v
                else:
                    res.pop(e, None)
        return self._new(res)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, code: int) -> MultiPoly:
        if code == 0:
            return self.ring.zero()
        if code == 1:
            return self
        F = self.ring.field
        return self._new({e: F.mul(c, code) for e, c in self.terms.items()})

    def mul_monomial(self, exp: tuple[int, ...], code: int = 1) -> MultiPoly:
        F = self.ring.field
        return self._new({tuple(map(_add, e, exp)): F.mul(c, code) for e, c in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return self.ring.zero()
        if len(b) == 1:
            (e, c), = b.items()
            return self.mul_monomial(e, c)
        if len(a) == 1:
            (e, c), = a.items()
            return other.mul_monomial(e, c)
        F = self.ring.field
        res: dict = {}
        get = res.get
        if F.m == 1:
            for e1, c1 in a.items():
                for e2, c2 in b.items():
                    e = tuple(map(_add, e1, e2))
                    res[e] = get(e, 0) + c1 * c2
            p = F.p
            out = {}
            for e, c in res.items():
                c %= p
                if c:
                    out[e] = c
            return self._new(out)
        fm, fa = F.mul, F.add
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(map(_add, e1, e2))
                res[e] = fa(get(e, 0), fm(c1, c2))
        return self._new({e: c for e, c in res.items() if c})

    __rmul__ = __mul__

    def frobenius(self) -> MultiPoly:
        """Return self**p, computed termwise (valid in characteristic p)."""
        F = self.ring.field
        p = F.p
        return self._new({tuple(k * p for k in e): F.frobenius(c) for e, c in self.terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        p = self.ring.field.p
        result = self.ring.one()
        base = self
        while n and n % p == 0:
            base = base.frobenius()
            n //= p
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divmod(self, divisor: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
        """Multivariate division by a single divisor (grlex).

        The remainder is exactly zero whenever ``divisor`` divides ``self``.
        """
        divisor = self._coerce(divisor)
        if not divisor.terms:
            raise DivisionByZero("polynomial division by zero")
        F = self.ring.field
        lt_e = divisor.leading_exponent()
        lt_inv = F.inv(divisor.terms[lt_e])
        rem = dict(self.terms)
        quot: dict = {}
        out_rem: dict = {}
        dterms = list(divisor.terms.items())
        while rem:
            e = max(rem, key=grlex_key)
            c = rem[e]
            if all(x >= y for x, y in zip(e, lt_e)):
                qe = tuple(x - y for x, y in zip(e, lt_e))
                qc = F.mul(c, lt_inv)
                quot[qe] = qc
                nqc = F.neg(qc)
                for de, dc in dterms:
                    te = tuple(map(_add, de, qe))
                    v = F.add(rem.get(te, 0), F.mul(nqc, dc))
                    if v:
                        rem[te] = v
                    else:
                        rem.pop(te, None)
            else:
                out_rem[e] = c
                del rem[e]
        return self._new(quot), self._new(out_rem)

    def exact_div(self, divisor: MultiPoly) -> MultiPoly:
        divisor = self._coerce(divisor)
        if divisor.is_constant():
            if divisor.is_zero():
                raise DivisionByZero("polynomial division by zero")
            return self.scale(self.ring.field.inv(divisor.constant_code()))
        if divisor.is_monomial():
            (de, dc), = divisor.terms.items()
            inv = self.ring.field.inv(dc)
            out = {}
            for e, c in self.terms.items():
                qe = tuple(x - y for x, y in zip(e, de))
                if min(qe) < 0:
                    raise ArithmeticError("inexact polynomial division")
                out[qe] = self.ring.field.mul(c, inv)
            return self._new(out)
        q, r = self.divmod(divisor)
        if r.terms:
            raise ArithmeticError("inexact polynomial division")
        return q

    def divides(self, other: MultiPoly) -> bool:
        """True iff self | other."""
        if not self.terms:
            return not other.terms
        return not other.divmod(self)[1].terms

    def gcd(self, other: MultiPoly) -> MultiPoly:
        from charp.exactfield.gcd import multipoly_gcd

        return multipoly_gcd(self, other)

    # -- calculus / structure --
    def derivative(self, var: str) -> MultiPoly:
        i = self.ring.var_index(var)
        F = self.ring.field
        out = {}
        for e, c in self.terms.items():
            k = e[i] % F.p
            if k:
                v = F.mul(c, F.from_int(k))
                if v:
                    ne = list(e)
                    ne[i] -= 1
                    out[tuple(ne)] = v
        return self._new(out)

    def is_pth_power(self) -> bool:
        p = self.ring.field.p
        return all(k % p == 0 for e in self.terms for k in e)

    def pth_root(self) -> MultiPoly:
        F = self.ring.field
        p = F.p
        out = {}
        for e, c in self.terms.items():
            if any(k % p for k in e):
                raise NotAPthPower("exponent not divisible by p")
            out[tuple(k // p for k in e)] = F.pth_root(c)
        return self._new(out)

    def coeffs_in(self, var: str) -> dict[int, MultiPoly]:
        """View as a univariate polynomial in ``var``: {degree: coefficient}."""
        i = self.ring.var_index(var)
        groups: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            groups.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: self._new(t) for k, t in groups.items()}

    @staticmethod
    def from_coeffs_in(ring: PolyRing, var: str, coeffs: dict[int, MultiPoly]) -> MultiPoly:
        i = ring.var_index(var)
        out = {}
        for k, poly in coeffs.items():
            for e, c in poly.terms.items():
                ne = e[:i] + (e[i] + k,) + e[i + 1:]
                out[ne] = c
        return MultiPoly(ring, out)

    def coeffs_in_vars(self, names) -> dict[tuple[int, ...], MultiPoly]:
        """Split into {exponents in ``names``: coefficient polynomial in the rest}."""
        idx = [self.ring.var_index(n) for n in names]
        groups: dict = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in idx)
            ne = list(e)
            for i in idx:
                ne[i] = 0
            groups.setdefault(key, {})[tuple(ne)] = c
        return {k: self._new(t) for k, t in groups.items()}

    def to_ring(self, target: PolyRing) -> MultiPoly:
        """Embed into ``target`` by variable name."""
        if target is self.ring:
            return self
        if target.field is not self.ring.field:
            raise MixedFields(f"cannot move {self.ring!r} into {target!r}")
        mask = self._var_mask()
        pos = []
        for i, n in enumerate(self.ring.names):
            if n in target.index:
                pos.append(target.index[n])
            elif mask[i]:
                raise UnknownVariable(f"variable {n!r} missing from {target!r}")
            else:
                pos.append(None)
        out = {}
        z = [0] * target.nvars
        for e, c in self.terms.items():
            ne = list(z)
            for i, k in enumerate(e):
                if k:
                    ne[pos[i]] = k
            out[tuple(ne)] = c
        return MultiPoly(target, out)

    def compose(self, mapping: dict[str, MultiPoly], target: PolyRing | None = None) -> MultiPoly:
        """Substitute polynomials for variables.

        Unmapped variables are carried over by name into ``target`` (default:
        the ring of the images, or self.ring if mapping is empty).
        """
        if target is None:
            target = next(iter(mapping.values())).ring if mapping else self.ring
        images = []
        for n in self.ring.names:
            if n in mapping:
                img = mapping[n]
                if not isinstance(img, MultiPoly):
                    img = target.const(img)
                elif img.ring is not target:
                    img = img.to_ring(target)
                images.append(img)
            elif n in target.index:
                images.append(target.gen(n))
            else:
                images.append(None)
        powers: list[dict[int, MultiPoly]] = [dict() for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                if images[i] is None:
                    raise UnknownVariable(f"variable {self.ring.names[i]!r} has no image")
                cache[k] = images[i] ** k
            return cache[k]

        acc: dict = {}
        F = target.field
        for e, c in self.terms.items():
            term = target.const_code(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for te, tc in term.terms.items():
                v = F.add(acc.get(te, 0), tc)
                if v:
                    acc[te] = v
                else:
                    acc.pop(te, None)
        return MultiPoly(target, acc)

    def evaluate(self, values: dict[str, int]) -> MultiPoly:
        """Substitute field-element codes for some variables."""
        ring = self.ring
        return self.compose({n: ring.const_code(v) for n, v in values.items()}, ring)

    # -- printing --
    def format(self) -> str:
        if not self.terms:
            return "0"
        F = self.ring.field
        names = self.ring.names
        parts = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            cs = F.format(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}" if " " in cs else f"{cs}*{mono}")
        return " + ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MultiPoly({self.format()!r})"
