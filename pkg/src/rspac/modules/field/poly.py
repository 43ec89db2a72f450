"""
Polynomials over GF(2^8).

Coefficients are stored in ascending powers (index i is the coefficient of
x^i) and normalized so the last stored coefficient is nonzero.
"""

from dataclasses import dataclass
from typing import ClassVar, Iterable

from rspac.modules.field.gf256 import FieldError, gf_inv, gf_mul


@dataclass(frozen=True)
class GfPoly:
    """Immutable polynomial with GF(2^8) coefficients in ascending order."""

    coeffs: tuple[int, ...]

    ZERO_DEGREE: ClassVar[int] = -1

    def __post_init__(self) -> None:
        trimmed = tuple(self.coeffs)
        end = len(trimmed)
        while end and trimmed[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", trimmed[:end])

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> "GfPoly":
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls) -> "GfPoly":
        return cls(())

    @classmethod
    def one(cls) -> "GfPoly":
        return cls((1,))

    @property
    def degree(self) -> int:
        """Degree, or ZERO_DEGREE (-1) for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "GfPoly") -> "GfPoly":
        return poly_add(self, other)

    def __mul__(self, other: "GfPoly") -> "GfPoly":
        return poly_mul(self, other)


def poly_add(p: GfPoly, q: GfPoly) -> GfPoly:
    """Coefficient-wise XOR."""
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] ^= c
    return GfPoly(tuple(out))


def poly_scale(p: GfPoly, c: int) -> GfPoly:
    return GfPoly(tuple(gf_mul(a, c) for a in p.coeffs))


def poly_eval(p: GfPoly, x: int) -> int:
    """Evaluate p at x with Horner's rule."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = gf_mul(acc, x) ^ c
    return acc


def poly_mul(p: GfPoly, q: GfPoly) -> GfPoly:
    """Product of two polynomials."""
    if p.is_zero or q.is_zero:
        return GfPoly.zero()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            if b:
                out[i + j] ^= gf_mul(a, b)
    return GfPoly(tuple(out))


def poly_divmod(num: GfPoly, den: GfPoly) -> tuple[GfPoly, GfPoly]:
    """
    Long division.

    Returns:
        (quotient, remainder) with num = quotient * den + remainder and
        deg remainder < deg den

    Raises:
        FieldError: if den is the zero polynomial
    """
    if den.is_zero:
        raise FieldError("Polynomial division by the zero polynomial")
    rem = list(num.coeffs)
    d = den.degree
    if len(rem) - 1 < d:
        return GfPoly.zero(), num
    lead_inv = gf_inv(den.coeffs[-1])
    quot = [0] * (len(rem) - d)
    for shift in range(len(rem) - 1 - d, -1, -1):
        coef = rem[shift + d]
        if coef == 0:
            continue
        factor = gf_mul(coef, lead_inv)
        quot[shift] = factor
        for j, dc in enumerate(den.coeffs):
            if dc:
                rem[shift + j] ^= gf_mul(dc, factor)
    return GfPoly(tuple(quot)), GfPoly(tuple(rem[:d]))


def poly_mod_xn(p: GfPoly, n: int) -> GfPoly:
    """p mod x^n (truncation)."""
    return GfPoly(p.coeffs[:n])


def poly_formal_derivative(p: GfPoly) -> GfPoly:
    """
    Formal derivative in characteristic 2.

    i * p_i is p_i for odd i and 0 for even i, so only odd-power terms
    survive, shifted down by one.
    """
    return GfPoly(tuple(c if i % 2 == 1 else 0 for i, c in enumerate(p.coeffs) if i > 0))
