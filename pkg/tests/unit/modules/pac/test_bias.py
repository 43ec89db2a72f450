"""
Unit tests for cutoff-rate bias estimation.
"""

import numpy as np
import pytest
from scipy import integrate
from scipy.stats import norm

from rspac.modules.pac import (
    PacCodecError,
    RateProfile,
    bias_from_bhattacharyya,
    biases_from_llrs,
    design_sigma,
    estimate_biases,
    resolve_biases,
)
from rspac.modules.pac import bias as bias_module
from rspac.modules.polar import check_node

PROFILE_64_32 = RateProfile(n=64, k=32, data_set=tuple(range(33, 65)))


class TestBiasFormula:
    """E0(1) = 1 - log2(1 + Z)."""

    def test_extremes(self):
        """Z = 0 gives 1 bit, Z = 1 gives 0."""
        assert bias_from_bhattacharyya([0.0, 1.0]).tolist() == [1.0, 0.0]

    def test_from_llrs(self):
        """Large positive LLRs give biases near 1."""
        biases = biases_from_llrs(np.full((10, 4), 40.0))
        assert np.all(biases > 0.999)

    def test_design_sigma(self):
        """Eb/N0 = 0 dB at rate 1/2 is unit noise variance."""
        assert design_sigma(0.0, 0.5) == pytest.approx(1.0)


class TestEstimateBiases:
    """Monte-Carlo estimation over the genie demapper."""

    def test_high_snr_limit(self):
        """At 30 dB every bit channel is nearly perfect."""
        biases = estimate_biases(PROFILE_64_32, 30.0, samples=10_000, seed=1)
        assert len(biases) == 64
        assert min(biases) > 0.999

    def test_low_snr_limit(self):
        """At -30 dB every bit channel is nearly useless."""
        biases = estimate_biases(PROFILE_64_32, -30.0, samples=10_000, seed=1)
        assert max(biases) < 0.05

    def test_too_few_samples(self):
        """Fewer than 10^4 samples is refused."""
        with pytest.raises(PacCodecError):
            estimate_biases(PROFILE_64_32, 5.0, samples=9_999, seed=1)

    def test_deterministic_in_seed(self):
        """Same seed, same biases; a new seed moves them."""
        first = estimate_biases(PROFILE_64_32, 3.0, samples=10_000, seed=7)
        assert estimate_biases(PROFILE_64_32, 3.0, samples=10_000, seed=7) == first
        assert estimate_biases(PROFILE_64_32, 3.0, samples=10_000, seed=8) != first

    def test_biases_grow_along_the_last_row(self):
        """The best synthesized channel (last bit) beats the worst (first bit)."""
        biases = estimate_biases(PROFILE_64_32, 3.0, samples=10_000, seed=3)
        assert biases[-1] > biases[0]

    def test_length_two_matches_quadrature(self):
        """
        For N = 2 the two bit channels have closed-form Bhattacharyya parameters.

        With channel LLRs ~ N(2/s^2, (2/s)^2): Z+ = exp(-1/(2 s^2))^2, and Z-
        is the expectation of exp(-L/2) over the box-plus of two such LLRs.
        """
        profile = RateProfile(n=2, k=1, data_set=(2,))
        snr_db = 0.0
        sigma = design_sigma(snr_db, 0.5)
        mean, std = 2.0 / sigma ** 2, 2.0 / sigma

        def integrand(b: float, a: float) -> float:
            combined = check_node(np.array([a]), np.array([b]))[0]
            return float(np.exp(-combined / 2.0) * norm.pdf(a, mean, std) * norm.pdf(b, mean, std))

        lo, hi = mean - 8 * std, mean + 8 * std
        z_minus, _ = integrate.dblquad(integrand, lo, hi, lo, hi, epsabs=1e-7)
        z_plus = np.exp(-1.0 / (2.0 * sigma ** 2)) ** 2
        expected = bias_from_bhattacharyya([z_minus, z_plus])

        estimated = estimate_biases(profile, snr_db, samples=200_000, seed=11)
        assert estimated == pytest.approx(expected.tolist(), rel=0.02)


class TestResolveBiases:
    """Cache lookups around estimation."""

    def test_miss_then_hit(self, memory_cache):
        """The second call is served from the cache."""
        first = resolve_biases(PROFILE_64_32, 5.0, 10_000, 2021, memory_cache)
        second = resolve_biases(PROFILE_64_32, 5.0, 10_000, 2021, memory_cache)
        assert first == second
        assert (memory_cache.misses, memory_cache.hits) == (1, 1)

    def test_no_cache(self, mocker):
        """Without a cache every call estimates."""
        spy = mocker.spy(bias_module, "estimate_biases")
        resolve_biases(PROFILE_64_32, 5.0, 10_000, 2021)
        resolve_biases(PROFILE_64_32, 5.0, 10_000, 2021)
        assert spy.call_count == 2
