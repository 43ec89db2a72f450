"""
Per-bit-channel cutoff-rate biases for the Fano metric.

For a binary-input symmetric channel E0(1, W) = 1 - log2(1 + Z(W)), with Z
the Bhattacharyya parameter. Z of every synthesized bit channel is estimated
by Monte Carlo: the all-zero codeword is sent at the design Eb/N0 and the
genie-aided SC demapper produces bit LLRs L_j, from which Z_j = E[exp(-L_j/2)].
"""

import logging
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from rspac.infrastructure.interfaces import BiasCache, BiasKey
from rspac.modules.pac.models import PacCodecError, RateProfile
from rspac.modules.polar import genie_bit_llrs
from rspac.rng import Stream, make_rng

logger = logging.getLogger(__name__)

MIN_BIAS_SAMPLES = 10_000
_CHUNK = 2_000


def bias_from_bhattacharyya(z: ArrayLike) -> NDArray[np.float64]:
    """1 - log2(1 + Z), clamped to [0, 1]."""
    z_arr = np.asarray(z, dtype=np.float64)
    return np.clip(1.0 - np.log2(1.0 + z_arr), 0.0, 1.0)


def biases_from_llrs(bit_llrs: ArrayLike) -> NDArray[np.float64]:
    """Biases from a (samples, N) array of genie bit LLRs under all-zero input."""
    llrs = np.atleast_2d(np.asarray(bit_llrs, dtype=np.float64))
    return bias_from_bhattacharyya(np.exp(-llrs / 2.0).mean(axis=0))


def design_sigma(ebn0_db: float, rate: float) -> float:
    """Noise std-dev for unit-energy BPSK at Eb/N0 with Eb normalized by rate."""
    return float(np.sqrt(1.0 / (2.0 * rate * 10.0 ** (ebn0_db / 10.0))))


def estimate_biases(
    profile: RateProfile,
    design_snr_db: float,
    samples: int,
    seed: int,
) -> list[float]:
    """
    Monte-Carlo cutoff-rate bias of each of the N bit channels.

    The noise level uses the profile's rate K/N. The precoder does not enter:
    all-zero v maps to all-zero u for every precoder.

    Args:
        profile: Rate profile (supplies N and K)
        design_snr_db: Design Eb/N0 in dB
        samples: Number of simulated transmissions (at least 10^4)
        seed: Seed of the estimation stream

    Returns:
        N biases in bits, each in [0, 1]

    Raises:
        PacCodecError: if samples is below 10^4
    """
    if samples < MIN_BIAS_SAMPLES:
        raise PacCodecError(f"bias estimation needs at least {MIN_BIAS_SAMPLES} samples")
    n = profile.n
    rate = float(profile.rate) if profile.k else 1.0
    sigma = design_sigma(design_snr_db, rate)
    rng = make_rng(seed, int(Stream.BIAS), n)
    z_sum = np.zeros(n, dtype=np.float64)
    done = 0
    while done < samples:
        batch = min(_CHUNK, samples - done)
        y = 1.0 + sigma * rng.standard_normal((batch, n))
        bit_llrs = genie_bit_llrs(2.0 * y / sigma ** 2)
        z_sum += np.exp(-bit_llrs / 2.0).sum(axis=0)
        done += batch
    biases = bias_from_bhattacharyya(z_sum / samples)
    logger.info(
        f"Estimated biases for N={n} at {design_snr_db} dB from {samples} samples",
        extra={"n": n, "design_snr_db": design_snr_db, "samples": samples},
    )
    return [float(b) for b in biases]


def resolve_biases(
    profile: RateProfile,
    design_snr_db: float,
    samples: int,
    seed: int,
    cache: Optional[BiasCache] = None,
) -> list[float]:
    """Cached biases for the key, estimating and storing them on a miss."""
    key = BiasKey(
        n=profile.n, k=profile.k, design_snr_db=design_snr_db, samples=samples, seed=seed
    )
    if cache is not None:
        cached = cache.get(key)
        if cached is not None:
            return cached
    biases = estimate_biases(profile, design_snr_db, samples, seed)
    if cache is not None:
        cache.set(key, biases)
    return biases
