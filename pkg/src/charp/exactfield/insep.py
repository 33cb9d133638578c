"""Simple purely inseparable extensions F[theta]/(theta^p - c).

Elements are coefficient tuples (b_0, ..., b_{p-1}) over F standing for
sum b_j theta^j.  Only used for residue fields of closed points, so no
tower support.
"""

from __future__ import annotations

from dataclasses import dataclass

from charp.errors import DivisionByZero, NotAPthPower
from charp.exactfield.ratfunc import FieldElement, FractionField


class RootExtension:
    def __init__(self, base: FractionField, radicand: FieldElement, check: bool = True):
        radicand = base.embed(radicand)
        if check and radicand.is_pth_power():
            raise NotAPthPower(
                f"{radicand} is already a {base.p}-th power; F[theta] would not be a field"
            )
        self.base = base
        self.radicand = radicand
        self.p = base.p

    def __repr__(self):
        return f"{self.base!r}[theta]/(theta^{self.p} - ({self.radicand}))"

    def __call__(self, *coeffs) -> RootElem:
        cs = [self.base.embed(c) for c in coeffs]
        if len(cs) > self.p:
            raise ValueError("too many coefficients")
        cs += [self.base.zero()] * (self.p - len(cs))
        return RootElem(self, tuple(cs))

    def theta(self) -> RootElem:
        return self(0, 1)

    def evaluate(self, coeffs_by_degree: dict[int, FieldElement]) -> RootElem:
        """Value at theta of the univariate polynomial sum c_k v^k."""
        out = self()
        power = self(1)
        theta = self.theta()
        for k in range(max(coeffs_by_degree, default=-1) + 1):
            if k in coeffs_by_degree:
                out = out + power * self(coeffs_by_degree[k])
            power = power * theta
        return out


@dataclass(frozen=True)
class RootElem:
    ext: RootExtension
    coeffs: tuple

    def __add__(self, other: RootElem) -> RootElem:
        return RootElem(self.ext, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: RootElem) -> RootElem:
        return RootElem(self.ext, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> RootElem:
        return RootElem(self.ext, tuple(-a for a in self.coeffs))

    def __mul__(self, other: RootElem) -> RootElem:
        p = self.ext.p
        c = self.ext.radicand
        out = [self.ext.base.zero()] * p
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                k = i + j
                if k >= p:
                    out[k - p] = out[k - p] + a * b * c
                else:
                    out[k] = out[k] + a * b
        return RootElem(self.ext, tuple(out))

    def __pow__(self, n: int) -> RootElem:
        result = self.ext(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def norm_power(self) -> FieldElement:
        """self**p, which always lies in the base field."""
        r = self ** self.ext.p
        if any(not a.is_zero() for a in r.coeffs[1:]):  # pragma: no cover
            raise AssertionError("p-th power left the base field")
        return r.coeffs[0]

    def inverse(self) -> RootElem:
        # x^{-1} = x^{p-1} / x^p with x^p in F
        n = self.norm_power()
        if n.is_zero():
            raise DivisionByZero("inverse of zero in root extension")
        return (self ** (self.ext.p - 1)) * self.ext(n.inverse())

    def __str__(self):
        parts = []
        for j, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            mono = "" if j == 0 else ("theta" if j == 1 else f"theta^{j}")
            s = a.format()
            if not mono:
                parts.append(s)
            elif a.is_one():
                parts.append(mono)
            else:
                parts.append(f"({s})*{mono}")
        return " + ".join(parts) or "0"
