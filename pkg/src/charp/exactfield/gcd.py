"""Greatest common divisors in GF(p^m)[x_1, ..., x_k].

Recursive content / primitive-part decomposition with a subresultant
pseudo-remainder sequence for the main variable.  Univariate inputs go
through a plain Euclidean algorithm over the coefficient field.  Coprime
multivariate inputs, the common case for random fractions, are usually
recognized first by coprime univariate specializations.
"""

from __future__ import annotations

import itertools

from charp.errors import MixedFields
from charp.exactfield.multipoly import MultiPoly


def multipoly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Monic gcd; ``gcd(0, 0) == 0``."""
    if a.ring is not b.ring:
        raise MixedFields(f"gcd across rings {a.ring!r} and {b.ring!r}")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    return _gcd(a, b).monic()


def multipoly_lcm(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if a.is_zero() or b.is_zero():
        return a.ring.zero()
    g = multipoly_gcd(a, b)
    return (a.exact_div(g) * b).monic()


def content(a: MultiPoly, var: str) -> MultiPoly:
    """gcd of the coefficients of ``a`` viewed as a polynomial in ``var``."""
    if a.is_zero():
        return a
    return _gcd_many(list(a.coeffs_in(var).values())).monic()


def primitive_part(a: MultiPoly, var: str) -> MultiPoly:
    if a.is_zero():
        return a
    c = content(a, var)
    return a if c.is_one() else a.exact_div(c)


def _gcd_many(polys: list[MultiPoly]) -> MultiPoly:
    polys = sorted((q for q in polys if not q.is_zero()), key=len)
    g = polys[0]
    for q in polys[1:]:
        if g.is_constant():
            break
        g = _gcd(g, q)
    return g


def _specialize(poly: MultiPoly, keep: int, point: dict) -> list[int]:
    """Dense coefficients in variable ``keep`` after substituting codes for the others."""
    F = poly.ring.field
    out: dict = {}
    for e, c in poly.terms.items():
        v = c
        for i, k in enumerate(e):
            if k and i != keep:
                v = F.mul(v, F.pow(point[i], k))
                if not v:
                    break
        if v:
            out[e[keep]] = F.add(out.get(e[keep], 0), v)
    dense = [out.get(k, 0) for k in range(max(out, default=-1) + 1)]
    while dense and not dense[-1]:
        dense.pop()
    return dense


def _dense_gcd_degree(a: list[int], b: list[int], F) -> int:
    while b:
        inv = F.inv(b[-1])
        a = list(a)
        while len(a) >= len(b):
            f = F.mul(a[-1], inv)
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[shift + i] = F.sub(a[shift + i], F.mul(f, c))
            while a and not a[-1]:
                a.pop()
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def _coprime_in(a: MultiPoly, b: MultiPoly, keep: int, common, tries: int = 4) -> bool:
    """True only if gcd(a, b) provably has degree 0 in variable ``keep``.

    Specialize the other variables to constants.  When both degrees in
    ``keep`` survive, any common factor of positive degree survives too, so
    coprime specializations rule it out.
    """
    F = a.ring.field
    others = [i for i in common if i != keep]
    da, db = a.degree(a.ring.names[keep]), b.degree(b.ring.names[keep])
    for n, values in enumerate(itertools.product(range(F.q), repeat=len(others))):
        if n >= tries:
            break
        point = dict(zip(others, values))
        sa, sb = _specialize(a, keep, point), _specialize(b, keep, point)
        if len(sa) - 1 != da or len(sb) - 1 != db:
            continue
        return _dense_gcd_degree(sa, sb, F) == 0
    return False


def _monomial_gcd(mono: MultiPoly, other: MultiPoly) -> MultiPoly:
    (me, _), = mono.terms.items()
    low = list(me)
    for e in other.terms:
        low = [min(x, y) for x, y in zip(low, e)]
    return mono.ring.monomial(tuple(low))


def _gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    # a, b nonzero; result defined up to a unit
    ring = a.ring
    if a.is_constant() or b.is_constant():
        return ring.one()
    if a.is_monomial():
        return _monomial_gcd(a, b)
    if b.is_monomial():
        return _monomial_gcd(b, a)
    if a.terms == b.terms:
        return a
    ma, mb = a._var_mask(), b._var_mask()
    names = ring.names
    # a variable present in only one argument cannot occur in the gcd
    only_a = [names[i] for i in range(ring.nvars) if ma[i] and not mb[i]]
    only_b = [names[i] for i in range(ring.nvars) if mb[i] and not ma[i]]
    if only_a or only_b:
        pieces = [b] if only_a else [a]
        if only_a:
            pieces += list(a.coeffs_in(only_a[0]).values())
        else:
            pieces += list(b.coeffs_in(only_b[0]).values())
        return _gcd_many(pieces)
    common = [i for i in range(ring.nvars) if ma[i]]
    if len(common) == 1:
        return _univariate_gcd(a, b, names[common[0]])
    if all(_coprime_in(a, b, i, common) for i in common):
        return ring.one()
    # main variable: smallest combined degree keeps the PRS short
    x = min((names[i] for i in common), key=lambda n: (a.degree(n) + b.degree(n), n))
    ca = _gcd_many(list(a.coeffs_in(x).values()))
    cb = _gcd_many(list(b.coeffs_in(x).values()))
    pa = a if ca.is_constant() else a.exact_div(ca)
    pb = b if cb.is_constant() else b.exact_div(cb)
    c = ring.one() if (ca.is_constant() or cb.is_constant()) else _gcd(ca, cb)
    g = _subresultant_gcd(pa, pb, x)
    return c * g


def _univariate_gcd(a: MultiPoly, b: MultiPoly, var: str) -> MultiPoly:
    ring = a.ring
    F = ring.field
    i = ring.var_index(var)

    def dense(poly):
        out = [0] * (poly.degree(var) + 1)
        for e, c in poly.terms.items():
            out[e[i]] = c
        return out

    u, v = dense(a), dense(b)
    if len(u) < len(v):
        u, v = v, u
    while v:
        # u <- u mod v
        inv = F.inv(v[-1])
        dv = len(v) - 1
        while len(u) - 1 >= dv:
            c = F.mul(u[-1], inv)
            shift = len(u) - 1 - dv
            if c:
                for j, vc in enumerate(v):
                    if vc:
                        u[shift + j] = F.sub(u[shift + j], F.mul(c, vc))
            u.pop()
            while u and u[-1] == 0:
                u.pop()
        u, v = v, u
    e0 = [0] * ring.nvars
    terms = {}
    for k, c in enumerate(u):
        if c:
            e = list(e0)
            e[i] = k
            terms[tuple(e)] = c
    return MultiPoly(ring, terms)


def _dense_in(poly: MultiPoly, var: str) -> list[MultiPoly]:
    coeffs = poly.coeffs_in(var)
    zero = poly.ring.zero()
    out = [zero] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return out


def _trim(coeffs: list[MultiPoly]) -> list[MultiPoly]:
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def pseudo_remainder(A: list[MultiPoly], B: list[MultiPoly]) -> list[MultiPoly]:
    """prem(A, B) = lc(B)^(deg A - deg B + 1) * A mod B, in dense coefficient form."""
    lcB = B[-1]
    dB = len(B) - 1
    R = list(A)
    e = len(A) - len(B) + 1
    while R and len(R) - 1 >= dB:
        lcR = R[-1]
        shift = len(R) - 1 - dB
        R = [lcB * r for r in R]
        for j, bc in enumerate(B):
            if not bc.is_zero():
                R[shift + j] = R[shift + j] - lcR * bc
        R.pop()
        _trim(R)
        e -= 1
    if e > 0 and R:
        f = lcB**e
        R = [f * r for r in R]
    return R


def _subresultant_gcd(a: MultiPoly, b: MultiPoly, x: str) -> MultiPoly:
    ring = a.ring
    A, B = _dense_in(a, x), _dense_in(b, x)
    if len(A) < len(B):
        A, B = B, A
    g = h = ring.one()
    while True:
        delta = len(A) - len(B)
        R = pseudo_remainder(A, B)
        if not R:
            break
        if len(R) == 1:
            return ring.one()
        divisor = g * h**delta
        A, B = B, [r.exact_div(divisor) for r in R]
        g = A[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = (g**delta).exact_div(h ** (delta - 1))
    res = MultiPoly.from_coeffs_in(ring, x, dict(enumerate(B)))
    return primitive_part(res, x)
