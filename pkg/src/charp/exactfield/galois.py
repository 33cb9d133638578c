"""Finite fields GF(p^m).

Elements are encoded as integers ``0 <= code < p**m``: the base-p digits of
``code`` are the coefficients c_0, ..., c_{m-1} of ``sum c_i * a**i`` where
``a`` is a root of the field's defining polynomial.  For m = 1 the code is
simply the residue mod p, so prime fields pay nothing for the generality.

Polynomial rings store raw codes; :class:`PrimeFieldElem` is the boxed,
user-facing value type.
"""

from __future__ import annotations

import functools
import itertools

from charp.errors import DivisionByZero, NonPrimeCharacteristic

# full log/exp tables are built below this field size
_TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q = p**m, or None if q is not a prime power."""
    if q < 2:
        return None
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    return (p, m) if r == 1 and is_prime(p) else None


# --- dense univariate helpers over GF(p); lists are low-degree first ---

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(_trim(a)) - 1 >= db:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
    return a


def _monic_polys(p, deg):
    for tail in itertools.product(range(p), repeat=deg):
        yield list(reversed(tail)) + [1]


def is_irreducible(f: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1 .. deg(f)//2."""
    n = len(f) - 1
    if n <= 0:
        return False
    for d in range(1, n // 2 + 1):
        for g in _monic_polys(p, d):
            if not _trim(_poly_mod(f, g, p)):
                return False
    return True


def lowest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lowest monic irreducible polynomial of degree m over GF(p).

    Candidates x^m + c_{m-1} x^{m-1} + ... + c_0 are scanned in increasing
    order of the tuple (c_{m-1}, ..., c_0); the first irreducible one wins.
    """
    if m == 1:
        return (0, 1)
    for f in _monic_polys(p, m):
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class GaloisField:
    """The field GF(p^m).  Obtain instances through :func:`GF` (cached)."""

    def __init__(self, p: int, m: int = 1, gen_name: str = "a"):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.m = m
        self.q = p**m
        self.gen_name = gen_name
        self.modulus = lowest_irreducible(p, m)
        self.is_prime_field = m == 1
        self._log = self._exp = None
        if m > 1 and self.q <= _TABLE_LIMIT:
            self._build_tables()

    def __repr__(self):
        return f"GF({self.p})" if self.m == 1 else f"GF({self.p}^{self.m})"

    def __reduce__(self):
        return (GF, (self.p, self.m, self.gen_name))

    # -- code <-> digit vector --
    def digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def from_digits(self, ds) -> int:
        code = 0
        for d in reversed(list(ds)):
            code = code * self.p + d % self.p
        return code

    def _slow_mul(self, a, b):
        p, m = self.p, self.m
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self.from_digits(_poly_mod(prod, list(self.modulus), p)[:m] + [0] * m)

    def _build_tables(self):
        q = self.q
        for g in range(2, q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._slow_mul(x, g)
            if len(exp) == q - 1:
                break
        else:  # pragma: no cover
            raise AssertionError("no primitive element")
        self._exp = exp + exp
        self._log = [0] * q
        for i, x in enumerate(exp):
            self._log[x] = i

    # -- arithmetic on codes --
    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out, scale = 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        return self.from_digits(-d for d in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if not a or not b:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero in " + repr(self))
        if self.m == 1:
            return pow(a, -1, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if self.m == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.q - 1)]
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def pth_root(self, a: int) -> int:
        # inverse of Frobenius: a^(q/p)
        if self.m == 1:
            return a
        return self.pow(a, self.q // self.p)

    def from_int(self, n: int) -> int:
        return n % self.p

    def elements(self):
        return range(self.q)

    def element(self, code: int) -> PrimeFieldElem:
        return PrimeFieldElem(self, code)

    def gen(self) -> PrimeFieldElem:
        """Root of the defining polynomial; 1 for a prime field."""
        return PrimeFieldElem(self, self.p if self.m > 1 else 1)

    def format(self, a: int) -> str:
        """Render a code as a polynomial in the generator name, highest power first."""
        if self.m == 1:
            return str(a)
        parts = []
        for i, d in reversed(list(enumerate(self.digits(a)))):
            if not d:
                continue
            if i == 0:
                parts.append(str(d))
                continue
            mono = self.gen_name if i == 1 else f"{self.gen_name}^{i}"
            parts.append(mono if d == 1 else f"{d}*{mono}")
        return " + ".join(parts) if parts else "0"


@functools.lru_cache(maxsize=None)
def GF(p: int, m: int = 1, gen_name: str = "a") -> GaloisField:
    """Cached constructor: one :class:`GaloisField` object per (p, m, name)."""
    return GaloisField(p, m, gen_name)


class PrimeFieldElem:
    """Boxed element of GF(p^m) with operator overloading."""

    __slots__ = ("field", "code")

    def __init__(self, field: GaloisField, code: int):
        self.field = field
        self.code = code % field.q if field.m == 1 else code
        if not 0 <= self.code < field.q:
            raise ValueError("code out of range")

    @property
    def characteristic(self):
        return self.field.p

    @property
    def extension_degree(self):
        return self.field.m

    @property
    def value(self) -> tuple[int, ...]:
        return tuple(self.field.digits(self.code))

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.field is not self.field:
                raise TypeError("elements of different fields")
            return other.code
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElem(self.field, self.field.add(self.code, o))

    __radd__ = __add__

    def __neg__(self):
        return PrimeFieldElem(self.field, self.field.neg(self.code))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElem(self.field, self.field.sub(self.code, o))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElem(self.field, self.field.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElem(self.field, self.field.div(self.code, o))

    def __rtruediv__(self, other):
        return PrimeFieldElem(self.field, self.field.inv(self.code)) * other

    def __pow__(self, e: int):
        return PrimeFieldElem(self.field, self.field.pow(self.code, e))

    def pth_root(self):
        return PrimeFieldElem(self.field, self.field.pth_root(self.code))

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElem):
            return self.field is other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"{self.field!r}({self.field.format(self.code)})"
