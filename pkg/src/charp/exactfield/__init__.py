"""Exact arithmetic: GF(p^m), sparse polynomials over it, and rational function fields."""

from charp.exactfield.galois import GF, GaloisField, PrimeFieldElem, is_prime, prime_power
from charp.exactfield.gcd import content, multipoly_gcd, multipoly_lcm, primitive_part
from charp.exactfield.multipoly import MultiPoly, PolyRing, poly_ring
from charp.exactfield.ratfunc import (
    FieldElement,
    FractionField,
    fraction_field,
    rational_function_field,
)


def partial_derivative(f, var: str):
    """d f / d var for a polynomial or a rational function."""
    return f.derivative(var)


def is_pth_power(f: FieldElement) -> bool:
    return f.is_pth_power()


def pth_root(f: FieldElement) -> FieldElement:
    return f.pth_root()


__all__ = [
    "GF", "GaloisField", "PrimeFieldElem", "is_prime", "prime_power",
    "MultiPoly", "PolyRing", "poly_ring",
    "FieldElement", "FractionField", "fraction_field", "rational_function_field",
    "multipoly_gcd", "multipoly_lcm", "content", "primitive_part",
    "partial_derivative", "is_pth_power", "pth_root",
]
