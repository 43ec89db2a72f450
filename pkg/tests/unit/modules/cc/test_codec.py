"""
Unit tests for the rate-1/2 convolutional code and Viterbi decoder.
"""

import itertools

import numpy as np
import pytest
from pydantic import ValidationError

from rspac.modules.cc import NASA_CC, TRELLIS_ANV, CcCodecError, CcSpec, cc_encode, viterbi_decode
from tests.factories import noiseless_llrs

INFO_LENGTH = 10


class TestCcSpec:
    """Generator validation."""

    def test_nasa_generators(self):
        """171/133 octal code in tap order, 64 states."""
        assert NASA_CC.masks == (0b1011011, 0b1111001)
        assert NASA_CC.state_count == TRELLIS_ANV == 64

    def test_wrong_length(self):
        """Seven taps are required."""
        with pytest.raises(ValidationError):
            CcSpec(g1=(1, 1, 1), g2=NASA_CC.g2)


class TestEncoder:
    """Zero-tail encoding."""

    def test_impulse_response(self):
        """A single 1 emits (g1_j, g2_j) pairs."""
        out = cc_encode(NASA_CC, [1])
        assert out.size == 14
        assert tuple(out[0::2]) == NASA_CC.g1
        assert tuple(out[1::2]) == NASA_CC.g2

    def test_zero_tail_block_length(self, rng):
        """Blocks carry 6 tail steps; all-zero input encodes to zeros."""
        info = rng.integers(0, 2, 50)
        out = cc_encode(NASA_CC, info)
        assert out.size == 2 * (50 + 6)
        assert not cc_encode(NASA_CC, np.zeros(50)).any()

    def test_linearity(self, rng):
        """enc(a) + enc(b) = enc(a + b)."""
        a, b = rng.integers(0, 2, 40), rng.integers(0, 2, 40)
        assert np.array_equal(cc_encode(NASA_CC, a) ^ cc_encode(NASA_CC, b), cc_encode(NASA_CC, a ^ b))


class TestViterbi:
    """Maximum-likelihood decoding."""

    def test_noiseless(self, rng):
        """Perfect LLRs decode to the info bits."""
        info = rng.integers(0, 2, 200, dtype=np.uint8)
        decoded = viterbi_decode(NASA_CC, noiseless_llrs(cc_encode(NASA_CC, info)))
        assert np.array_equal(decoded, info)

    def test_matches_exhaustive_search(self, rng):
        """At 0 dB the Viterbi output is the best of all 2^10 info words."""
        words = np.array(list(itertools.product((0, 1), repeat=INFO_LENGTH)), dtype=np.uint8)
        signs = np.array([1.0 - 2.0 * cc_encode(NASA_CC, w) for w in words])
        for _ in range(200):
            info = rng.integers(0, 2, INFO_LENGTH, dtype=np.uint8)
            y = 1.0 - 2.0 * cc_encode(NASA_CC, info) + rng.normal(0.0, 1.0, 2 * (INFO_LENGTH + 6))
            llrs = 2.0 * y
            best = words[int(np.argmax(signs @ llrs))]
            assert np.array_equal(viterbi_decode(NASA_CC, llrs), best)

    def test_corrects_scattered_errors(self, rng):
        """Two flipped hard decisions far apart are corrected (d_free = 10)."""
        info = rng.integers(0, 2, 100, dtype=np.uint8)
        code = cc_encode(NASA_CC, info)
        code[[20, 150]] ^= 1
        assert np.array_equal(viterbi_decode(NASA_CC, noiseless_llrs(code, magnitude=1.0)), info)

    def test_empty_info(self):
        """A block of only tail decodes to nothing."""
        assert viterbi_decode(NASA_CC, np.ones(12)).size == 0

    @pytest.mark.parametrize("size", [13, 10])
    def test_malformed_blocks(self, size):
        """Odd counts and blocks shorter than the tail raise."""
        with pytest.raises(CcCodecError):
            viterbi_decode(NASA_CC, np.zeros(size))
