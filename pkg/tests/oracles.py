"""Reference implementations used as test oracles.

Nothing here imports the package: polynomials over GF(p) are plain dicts
{exponent tuple: residue}, matrices are lists of ints mod p.
"""

import itertools


def padd(a, b, p):
    out = dict(a)
    for e, c in b.items():
        v = (out.get(e, 0) + c) % p
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def pneg(a, p):
    return {e: (-c) % p for e, c in a.items()}


def pmul(a, b, p):
    out = {}
    for (e1, c1), (e2, c2) in itertools.product(a.items(), b.items()):
        e = tuple(x + y for x, y in zip(e1, e2))
        out[e] = (out.get(e, 0) + c1 * c2) % p
    return {e: c for e, c in out.items() if c}


def ppow(a, k, p, nvars):
    out = {(0,) * nvars: 1}
    for _ in range(k):
        out = pmul(out, a, p)
    return out


def pderiv(a, i, p):
    out = {}
    for e, c in a.items():
        if e[i]:
            v = c * e[i] % p
            if v:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = v
    return out


def peval(a, point, p):
    total = 0
    for e, c in a.items():
        term = c
        for x, k in zip(point, e):
            term = term * pow(x, k, p) % p
        total += term
    return total % p


def rank_mod_p(rows, p):
    """Rank of an integer matrix over GF(p), plain Gaussian elimination."""
    M = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], p - 2, p)
        M[rank] = [x * inv % p for x in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][c]:
                f = M[r][c]
                M[r] = [(x - f * y) % p for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


def monomial_rank(exponents, p):
    """dim span of d(t^e) for Laurent monomials t^e: rank of the exponent matrix mod p.

    d(t^e) = t^e * sum e_i dt_i / t_i, so the Jacobian rows are the exponent
    vectors up to invertible row and column scalings.
    """
    return rank_mod_p(exponents, p) if exponents else 0


def dense_gcd(a, b, p):
    """Monic gcd of dense coefficient lists (constant term first) over GF(p)."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _dense_rem(a, b, p)
    if not a:
        return []
    inv = pow(a[-1], p - 2, p)
    return [x * inv % p for x in a]


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_rem(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and a:
        f = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        a = _trim(a)
    return a


def all_dense_polys(p, degree):
    """Every polynomial over GF(p) of degree <= degree, as trimmed dense lists."""
    for coeffs in itertools.product(range(p), repeat=degree + 1):
        yield _trim(list(coeffs))


def dense_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def dense_pow(a, k, p):
    out = [1]
    for _ in range(k):
        out = dense_mul(out, a, p)
    return out


def dense_eval(a, x, p):
    return sum(c * pow(x, i, p) for i, c in enumerate(a)) % p


def int_det(M):
    """Laplace expansion; fine for the tiny matrices in the tests."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        total += (-1) ** j * M[0][j] * int_det(minor)
    return total
