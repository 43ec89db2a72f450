"""
GF(2^8) arithmetic.

Elements are plain ints in [0, 255]; bit i is the coefficient of x^i. The field
is built on the primitive polynomial pi(x) = 1 + x^2 + x^3 + x^4 + x^8 (0x11D)
with alpha = x (0x02) as primitive element.

Multiplication uses exp/log tables generated once at import from the
shift-and-reduce routine, which stays available as ``gf_mul_reference`` for
cross-checking.
"""

import numpy as np

from rspac.exceptions import RspacError

PRIMITIVE_POLY = 0x11D
ALPHA = 0x02
FIELD_SIZE = 256
GROUP_ORDER = 255


class FieldError(RspacError, ZeroDivisionError):
    """Raised on division by zero in GF(2^8)."""
    pass


def gf_mul_reference(a: int, b: int) -> int:
    """Carry-less multiply with reduction modulo pi(x), bit by bit."""
    product = 0
    while b:
        if b & 1:
            product ^= a
        b >>= 1
        a <<= 1
        if a & 0x100:
            a ^= PRIMITIVE_POLY
    return product


def _build_tables() -> tuple[list[int], list[int]]:
    # exp is doubled so exp[log a + log b] never needs a modulo
    exp = [0] * (2 * GROUP_ORDER)
    log = [0] * FIELD_SIZE
    x = 1
    for i in range(GROUP_ORDER):
        exp[i] = x
        log[x] = i
        x = gf_mul_reference(x, ALPHA)
    for i in range(GROUP_ORDER, 2 * GROUP_ORDER):
        exp[i] = exp[i - GROUP_ORDER]
    return exp, log


EXP_TABLE, LOG_TABLE = _build_tables()

# Vector views for numpy-side syndrome and Chien evaluation (read-only).
EXP_ARRAY = np.array(EXP_TABLE, dtype=np.int64)
LOG_ARRAY = np.array(LOG_TABLE, dtype=np.int64)
EXP_ARRAY.setflags(write=False)
LOG_ARRAY.setflags(write=False)


def gf_add(a: int, b: int) -> int:
    """Add two field elements (bitwise XOR)."""
    return a ^ b


def gf_mul(a: int, b: int) -> int:
    """Multiply two field elements."""
    if a == 0 or b == 0:
        return 0
    return EXP_TABLE[LOG_TABLE[a] + LOG_TABLE[b]]


def gf_inv(a: int) -> int:
    """
    Multiplicative inverse.

    Raises:
        FieldError: if a is zero
    """
    if a == 0:
        raise FieldError("Zero has no multiplicative inverse in GF(2^8)")
    return EXP_TABLE[(GROUP_ORDER - LOG_TABLE[a]) % GROUP_ORDER]


def gf_div(a: int, b: int) -> int:
    """Divide a by b."""
    if b == 0:
        raise FieldError("Division by zero in GF(2^8)")
    if a == 0:
        return 0
    return EXP_TABLE[(LOG_TABLE[a] - LOG_TABLE[b]) % GROUP_ORDER]


def gf_pow(a: int, e: int) -> int:
    """
    Raise a to an integer power.

    Exponents of nonzero bases are reduced modulo 255, so negative exponents
    give powers of the inverse.

    Raises:
        FieldError: if a is zero and e is negative
    """
    if a == 0:
        if e < 0:
            raise FieldError("Zero cannot be raised to a negative power")
        return 1 if e == 0 else 0
    return EXP_TABLE[(LOG_TABLE[a] * e) % GROUP_ORDER]


def alpha_pow(e: int) -> int:
    """alpha^e for any integer e."""
    return EXP_TABLE[e % GROUP_ORDER]
