"""
Wire format shared by the concatenated schemes.

RS words travel message first, then parity: H = (d..., p...). Inside an
inner block, bytes are taken in index order and each byte is expanded
LSB first.
"""

from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from rspac.modules.rs import RsCodeSpec


def bytes_to_bits(symbols: ArrayLike) -> NDArray[np.uint8]:
    """Expand bytes along the last axis, LSB first."""
    return np.unpackbits(np.asarray(symbols, dtype=np.uint8), axis=-1, bitorder="little")


def bits_to_bytes(bits: ArrayLike) -> NDArray[np.uint8]:
    """Inverse of ``bytes_to_bits``; the last axis must be a multiple of 8."""
    return np.packbits(np.asarray(bits, dtype=np.uint8), axis=-1, bitorder="little")


def codeword_to_wire(spec: RsCodeSpec, codeword: Sequence[int]) -> list[int]:
    """Coefficient order (parity, message) -> wire order (message, parity)."""
    p = spec.parity_len
    return list(codeword[p:]) + list(codeword[:p])


def wire_to_codeword(spec: RsCodeSpec, wire: Sequence[int]) -> list[int]:
    return list(wire[spec.k :]) + list(wire[: spec.k])
