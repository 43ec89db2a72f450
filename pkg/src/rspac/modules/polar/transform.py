"""
Polar transform x = u F^{(x)n} over GF(2), F = [[1, 0], [1, 1]].
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from rspac.exceptions import RspacError


class PolarError(RspacError, ValueError):
    """Raised on invalid polar lengths or out-of-order demapper use."""
    pass


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def log2_length(n: int) -> int:
    """log2 of a power-of-two length."""
    if not is_power_of_two(n):
        raise PolarError(f"length {n} is not a power of two")
    return n.bit_length() - 1


def polar_transform(u: ArrayLike) -> NDArray[np.uint8]:
    """
    Apply F^{(x)n} along the last axis in N log N XOR butterflies.

    Works on a single vector or a batch of shape (..., N). The transform is
    its own inverse.
    """
    x = np.array(u, dtype=np.uint8, copy=True)
    n_bits = x.shape[-1]
    log2_length(n_bits)
    lead = x.shape[:-1]
    half = 1
    while half < n_bits:
        view = x.reshape(*lead, n_bits // (2 * half), 2, half)
        view[..., 0, :] ^= view[..., 1, :]
        half *= 2
    return x


def kronecker_power(n: int) -> NDArray[np.uint8]:
    """Explicit F^{(x)n} matrix (small n only)."""
    kernel = np.array([[1, 0], [1, 1]], dtype=np.uint8)
    g = np.ones((1, 1), dtype=np.uint8)
    for _ in range(n):
        g = np.kron(g, kernel)
    return g
