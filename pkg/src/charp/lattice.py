"""Integral lattices given by a Gram matrix."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def bareiss_det(M) -> int:
    """Exact determinant of a square integer matrix."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def smith_normal_form(M) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix (nonnegative, zeros last)."""
    A = [list(r) for r in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(A[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        A[t], A[i] = A[i], A[t]
        for r in A:
            r[t], r[j] = r[j], r[t]
        while True:
            changed = False
            for i in range(t + 1, rows):
                q = A[i][t] // A[t][t]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    A[t], A[i] = A[i], A[t]
                    changed = True
            for j in range(t + 1, cols):
                q = A[t][j] // A[t][t]
                if q:
                    for r in A:
                        r[j] -= q * r[t]
                if A[t][j]:
                    for r in A:
                        r[t], r[j] = r[j], r[t]
                    changed = True
            if changed:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
        diag.append(abs(A[t][t]))
        t += 1
    return diag + [0] * (min(rows, cols) - len(diag))


@dataclass(frozen=True)
class IntLattice:
    gram: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in r) for r in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if any(len(r) != n for r in g):
            raise ValueError("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise ValueError("Gram matrix must be symmetric")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"e{i + 1}" for i in range(n)))
        elif len(self.labels) != n:
            raise ValueError("one label per basis vector")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def det(self) -> int:
        return bareiss_det(self.gram)

    def pair(self, a, b):
        """Bilinear form on coordinate vectors (ints or Fractions)."""
        n = self.rank
        return sum(a[i] * self.gram[i][j] * b[j] for i in range(n) for j in range(n))

    def square(self, a):
        return self.pair(a, a)

    def vector(self, **coeffs) -> tuple:
        unknown = set(coeffs) - set(self.labels)
        if unknown:
            raise KeyError(f"unknown basis labels {sorted(unknown)}")
        return tuple(coeffs.get(lab, 0) for lab in self.labels)

    @staticmethod
    def is_primitive(v) -> bool:
        return math.gcd(*(int(x) for x in v)) == 1

    def dual_basis(self) -> list[tuple[Fraction, ...]]:
        """e_i^* in S tensor Q, i.e. the rows of the inverse Gram matrix."""
        n = self.rank
        if self.det() == 0:
            raise ValueError("degenerate lattice has no dual basis")
        # Gauss-Jordan over Q
        A = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
             for i, r in enumerate(self.gram)]
        for c in range(n):
            piv = next(r for r in range(c, n) if A[r][c] != 0)
            A[c], A[piv] = A[piv], A[c]
            inv = 1 / A[c][c]
            A[c] = [x * inv for x in A[c]]
            for r in range(n):
                if r != c and A[r][c] != 0:
                    f = A[r][c]
                    A[r] = [x - f * y for x, y in zip(A[r], A[c])]
        return [tuple(A[i][n:]) for i in range(n)]

    def discriminant_invariants(self) -> list[int]:
        """Invariant factors > 1 of S*/S (Smith form of the Gram matrix)."""
        return [d for d in smith_normal_form(self.gram) if d != 1]

    def discriminant_order(self) -> int:
        return math.prod(self.discriminant_invariants())

    def order_mod_lattice(self, v) -> int:
        """Order of a rational vector v in (S tensor Q) / S."""
        return math.lcm(*(Fraction(x).denominator for x in v))

    def in_dual(self, v) -> bool:
        return all(Fraction(self.pair(v, e)).denominator == 1 for e in self.basis())

    def basis(self) -> list[tuple[int, ...]]:
        n = self.rank
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]

    def format_vector(self, v) -> str:
        parts = []
        for c, lab in zip(v, self.labels):
            if c == 0:
                continue
            parts.append(lab if c == 1 else f"{c}*{lab}")
        return " + ".join(parts) or "0"
