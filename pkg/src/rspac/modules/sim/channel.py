"""
BPSK over AWGN.

LLRs follow log P(y|0)/P(y|1) with 0 -> +1 and 1 -> -1, so LLR = 2y / sigma^2.
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.stats import norm

from rspac.modules.sim.models import ChannelSpec


def bpsk_modulate(bits: ArrayLike) -> NDArray[np.float64]:
    """0 -> +1.0, 1 -> -1.0."""
    return 1.0 - 2.0 * np.asarray(bits, dtype=np.float64)


def awgn_llrs(symbols: ArrayLike, ch: ChannelSpec, rng: np.random.Generator) -> NDArray[np.float64]:
    """Add N(0, sigma^2) noise and return channel LLRs 2y / sigma^2."""
    s = np.asarray(symbols, dtype=np.float64)
    y = s + ch.sigma * rng.standard_normal(s.shape)
    return 2.0 * y / ch.sigma2


def hard_decision(llrs: ArrayLike) -> NDArray[np.uint8]:
    """Bit 1 where the LLR is negative; LLR 0 decides 0."""
    return (np.asarray(llrs) < 0).astype(np.uint8)


def theoretical_uncoded_ber(ebn0_db: ArrayLike) -> NDArray[np.float64]:
    """Q(sqrt(2 Eb/N0)) for uncoded BPSK."""
    ebn0 = 10.0 ** (np.asarray(ebn0_db, dtype=np.float64) / 10.0)
    return norm.sf(np.sqrt(2.0 * ebn0))
