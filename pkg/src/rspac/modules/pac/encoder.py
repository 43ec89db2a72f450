"""
PAC encoding: data insertion, convolutional precoding and the polar transform.

x = v T F^{(x)n}, with v_A = h and v_{A^c} = 0. The systematic encoder
picks the codeword whose bits at A equal h.
"""

import logging
from functools import lru_cache

import numpy as np
from numpy.typing import ArrayLike, NDArray

from rspac.modules.pac.models import ConvSpec, PacCodeSpec, PacCodecError, RateProfile
from rspac.modules.polar import kronecker_power, log2_length, polar_transform

logger = logging.getLogger(__name__)


def _bits(values: ArrayLike, expected: int, what: str) -> NDArray[np.uint8]:
    arr = np.asarray(values, dtype=np.uint8).reshape(-1)
    if arr.size != expected:
        raise PacCodecError(f"{what} has {arr.size} bits, expected {expected}")
    if np.any(arr > 1):
        raise PacCodecError(f"{what} contains non-binary values")
    return arr


def conv_encode(conv: ConvSpec, v: ArrayLike) -> NDArray[np.uint8]:
    """u_i = sum_{j=0..m} c_j v_{i-j} over GF(2), truncated to len(v)."""
    v_arr = np.asarray(v, dtype=np.uint8).reshape(-1)
    if v_arr.size == 0:
        return v_arr.copy()
    taps = np.asarray(conv.taps, dtype=np.int64)
    full = np.convolve(v_arr.astype(np.int64), taps)[: v_arr.size]
    return (full & 1).astype(np.uint8)


def conv_invert(conv: ConvSpec, u: ArrayLike) -> NDArray[np.uint8]:
    """Solve u = vT for v (T is unit upper triangular)."""
    u_arr = np.asarray(u, dtype=np.uint8).reshape(-1)
    taps = conv.taps
    v = np.zeros_like(u_arr)
    for i in range(u_arr.size):
        acc = int(u_arr[i])
        for j in range(1, min(len(taps), i + 1)):
            if taps[j]:
                acc ^= int(v[i - j])
        v[i] = acc
    return v


def toeplitz_matrix(conv: ConvSpec, n: int) -> NDArray[np.uint8]:
    """Upper-triangular Toeplitz T with T[i, i + j] = c_j."""
    t = np.zeros((n, n), dtype=np.uint8)
    for j, c in enumerate(conv.taps):
        if c and j < n:
            idx = np.arange(n - j)
            t[idx, idx + j] = 1
    return t


def insert_data(profile: RateProfile, h: ArrayLike) -> NDArray[np.uint8]:
    """v with v_A = h and zeros elsewhere."""
    h_arr = _bits(h, profile.k, "data word")
    v = np.zeros(profile.n, dtype=np.uint8)
    v[list(profile.positions)] = h_arr
    return v


def pac_transform(spec: PacCodeSpec, v: ArrayLike) -> NDArray[np.uint8]:
    """x = v T F^{(x)n}."""
    v_arr = _bits(v, spec.n, "precoder input")
    return polar_transform(conv_encode(spec.conv, v_arr))


def pac_encode_nonsystematic(spec: PacCodeSpec, h: ArrayLike) -> NDArray[np.uint8]:
    """Insert h at A, precode and transform."""
    return polar_transform(conv_encode(spec.conv, insert_data(spec.profile, h)))


def recover_v(spec: PacCodeSpec, x: ArrayLike) -> NDArray[np.uint8]:
    """v = x F^{(x)n} T^{-1}; for a codeword, v_{A^c} = 0."""
    x_arr = _bits(x, spec.n, "codeword")
    return conv_invert(spec.conv, polar_transform(x_arr))


def gf2_inverse(matrix: NDArray[np.uint8]) -> NDArray[np.uint8]:
    """
    Inverse of a square binary matrix by Gauss-Jordan elimination.

    Raises:
        PacCodecError: if the matrix is singular
    """
    size = matrix.shape[0]
    if matrix.shape != (size, size):
        raise PacCodecError(f"matrix of shape {matrix.shape} is not square")
    work = np.concatenate([matrix.astype(np.uint8) & 1, np.eye(size, dtype=np.uint8)], axis=1)
    for col in range(size):
        pivots = np.nonzero(work[col:, col])[0]
        if pivots.size == 0:
            raise PacCodecError("matrix is singular over GF(2)")
        pivot = col + int(pivots[0])
        if pivot != col:
            work[[col, pivot]] = work[[pivot, col]]
        rows = np.nonzero(work[:, col])[0]
        rows = rows[rows != col]
        work[rows] ^= work[col]
    return work[:, size:].copy()


@lru_cache(maxsize=32)
def _systematic_map(taps: tuple[int, ...], n: int, positions: tuple[int, ...]) -> NDArray[np.uint8]:
    data = list(positions)
    frozen = [i for i in range(n) if i not in set(positions)]
    t = toeplitz_matrix(ConvSpec(taps=taps), n).astype(np.int64)
    g = (t @ kronecker_power(log2_length(n)).astype(np.int64)) & 1
    try:
        inv = gf2_inverse(g[np.ix_(data, data)].astype(np.uint8)).astype(np.int64)
    except PacCodecError as e:
        raise PacCodecError(
            f"G_AA of the ({n},{len(data)}) code is singular for this profile and precoder"
        ) from e
    mapping = (inv @ g[np.ix_(data, frozen)]) & 1
    mapping = mapping.astype(np.uint8)
    mapping.setflags(write=False)
    logger.debug(f"Built systematic map for ({n},{len(data)}) PAC code")
    return mapping


def systematic_map(spec: PacCodeSpec) -> NDArray[np.uint8]:
    """K x (N-K) matrix G_AA^{-1} G_{A,A^c} over GF(2)."""
    return _systematic_map(spec.conv.taps, spec.n, spec.profile.positions)


def pac_encode_systematic(spec: PacCodeSpec, h: ArrayLike) -> NDArray[np.uint8]:
    """
    Codeword with x_A = h and x_{A^c} = h G_AA^{-1} G_{A,A^c}.

    Raises:
        PacCodecError: on a length mismatch, or when G_AA is singular for the
            profile/precoder combination
    """
    h_arr = _bits(h, spec.k, "data word")
    mapping = systematic_map(spec)
    x = np.zeros(spec.n, dtype=np.uint8)
    x[list(spec.profile.positions)] = h_arr
    if spec.k:
        parity = (h_arr.astype(np.int64) @ mapping.astype(np.int64)) & 1
        x[list(spec.profile.frozen_positions)] = parity
    return x


def pac_encode(spec: PacCodeSpec, h: ArrayLike, systematic: bool = True) -> NDArray[np.uint8]:
    if systematic:
        return pac_encode_systematic(spec, h)
    return pac_encode_nonsystematic(spec, h)


def extract_data(spec: PacCodeSpec, v: ArrayLike, systematic: bool = True) -> NDArray[np.uint8]:
    """
    Data bits from a decoded precoder input.

    Non-systematic: v_A. Systematic: re-encode v and read x_A.
    """
    v_arr = _bits(v, spec.n, "decoded v")
    positions = list(spec.profile.positions)
    if systematic:
        return pac_transform(spec, v_arr)[positions]
    return v_arr[positions]
