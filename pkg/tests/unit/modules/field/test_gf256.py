"""
Unit tests for GF(2^8) arithmetic.

The field is small enough that identities are checked exhaustively.
"""

import pytest

from rspac.modules.field import (
    EXP_TABLE,
    LOG_TABLE,
    PRIMITIVE_POLY,
    FieldError,
    alpha_pow,
    gf_add,
    gf_div,
    gf_inv,
    gf_mul,
    gf_mul_reference,
    gf_pow,
)


class TestTables:
    """Log/antilog tables built from the primitive polynomial."""

    def test_alpha_generates_every_nonzero_element(self):
        """alpha^0 .. alpha^254 are the 255 nonzero elements, each once."""
        assert sorted(EXP_TABLE[:255]) == list(range(1, 256))

    def test_log_inverts_exp(self):
        """log(alpha^i) = i for i in [0, 255)."""
        for i in range(255):
            assert LOG_TABLE[EXP_TABLE[i]] == i

    def test_alpha_8_reduces_by_primitive_polynomial(self):
        """x^8 = x^4 + x^3 + x^2 + 1 modulo 0x11D."""
        assert PRIMITIVE_POLY == 0x11D
        assert alpha_pow(8) == 0x1D


class TestGfMul:
    """Table multiplication against the shift-and-reduce reference."""

    def test_all_pairs_match_reference(self):
        """All 65,536 products agree."""
        mismatches = [
            (a, b)
            for a in range(256)
            for b in range(256)
            if gf_mul(a, b) != gf_mul_reference(a, b)
        ]
        assert mismatches == []

    def test_identity_and_zero(self):
        """a * 1 = a and a * 0 = 0 for every a."""
        for a in range(256):
            assert gf_mul(a, 1) == a
            assert gf_mul(a, 0) == 0

    def test_distributes_over_addition(self):
        """a (b + c) = ab + ac on a sample grid."""
        for a in range(0, 256, 7):
            for b in range(0, 256, 11):
                for c in (0, 1, 0x53, 0xCA, 0xFF):
                    assert gf_mul(a, gf_add(b, c)) == gf_add(gf_mul(a, b), gf_mul(a, c))


class TestGfInv:
    """Multiplicative inverses."""

    def test_every_nonzero_element_has_inverse(self):
        """a * a^-1 = 1 for all 255 nonzero a."""
        for a in range(1, 256):
            assert gf_mul(a, gf_inv(a)) == 1

    def test_zero_has_no_inverse(self):
        """Inverting zero raises FieldError, which is a ZeroDivisionError."""
        with pytest.raises(FieldError):
            gf_inv(0)
        with pytest.raises(ZeroDivisionError):
            gf_inv(0)

    def test_division_undoes_multiplication(self):
        """(a * b) / b = a for nonzero b."""
        for a in range(0, 256, 3):
            for b in range(1, 256, 5):
                assert gf_div(gf_mul(a, b), b) == a

    def test_division_by_zero(self):
        """a / 0 raises FieldError."""
        with pytest.raises(FieldError):
            gf_div(7, 0)


class TestGfPow:
    """Integer powers and powers of the primitive element."""

    def test_group_order(self):
        """a^255 = 1 for every nonzero a."""
        for a in range(1, 256):
            assert gf_pow(a, 255) == 1

    def test_negative_power_is_inverse(self):
        """a^-1 = gf_inv(a)."""
        for a in range(1, 256):
            assert gf_pow(a, -1) == gf_inv(a)

    def test_zero_base(self):
        """0^0 = 1, 0^e = 0 for e > 0, 0^-1 raises."""
        assert gf_pow(0, 0) == 1
        assert gf_pow(0, 5) == 0
        with pytest.raises(FieldError):
            gf_pow(0, -1)

    def test_alpha_pow_wraps_any_integer(self):
        """alpha^e depends only on e mod 255."""
        assert alpha_pow(0) == 1
        assert alpha_pow(255) == 1
        assert alpha_pow(-1) == gf_inv(2)
        assert alpha_pow(300) == alpha_pow(45)
