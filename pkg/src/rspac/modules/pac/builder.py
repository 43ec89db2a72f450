"""
Assemble ready-to-use PAC code specs.
"""

import logging
from typing import Optional

from rspac.infrastructure.interfaces import BiasCache
from rspac.modules.pac.bias import resolve_biases
from rspac.modules.pac.models import (
    PacCodecError,
    PacCodeSpec,
    RateProfile,
    parse_octal_connection,
)
from rspac.modules.pac.profiles import default_profile

logger = logging.getLogger(__name__)

# design Eb/N0 of the bundled and RM profiles
DESIGN_SNR_DB: dict[tuple[int, int], float] = {
    (64, 32): 5.0,
    (64, 40): 6.0,
    (128, 64): 3.5,
}
FALLBACK_DESIGN_SNR_DB = 3.0


def default_design_snr(n: int, k: int) -> float:
    return DESIGN_SNR_DB.get((n, k), FALLBACK_DESIGN_SNR_DB)


def build_pac_spec(
    n: int,
    k: int,
    conv_octal: str = "3211",
    design_snr_db: Optional[float] = None,
    samples: int = 20_000,
    seed: int = 2021,
    cache: Optional[BiasCache] = None,
    profile: Optional[RateProfile] = None,
) -> PacCodeSpec:
    """
    PAC(n, k) with the default profile (or the one given) and resolved biases.

    Raises:
        PacCodecError: on invalid dimensions, taps or profile mismatch
    """
    if profile is None:
        profile = default_profile(n, k)
    elif (profile.n, profile.k) != (n, k):
        raise PacCodecError(f"profile is ({profile.n},{profile.k}), expected ({n},{k})")
    snr = default_design_snr(n, k) if design_snr_db is None else design_snr_db
    biases = resolve_biases(profile, snr, samples, seed, cache)
    logger.debug(f"Built PAC({n},{k}) c={conv_octal} design SNR {snr} dB")
    return PacCodeSpec(
        profile=profile,
        conv=parse_octal_connection(conv_octal),
        biases=tuple(biases),
        design_snr_db=snr,
    )
