"""
Unit tests for PAC parameter models.
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from rspac.modules.pac import (
    ConvSpec,
    PacCodeSpec,
    PacCodecError,
    RateProfile,
    parse_octal_connection,
)


class TestOctalConnection:
    """Octal precoder strings."""

    def test_default_precoder(self):
        """3211 (octal) is 11010001001, memory 10."""
        conv = parse_octal_connection("3211")
        assert conv.taps == (1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 1)
        assert conv.memory == 10

    def test_short_precoder(self):
        """13 (octal) is 1011."""
        assert ConvSpec.from_octal("13").taps == (1, 0, 1, 1)

    @pytest.mark.parametrize("text", ["", "9", "3a", "0", "2", "3210"])
    def test_invalid_strings(self, text):
        """Non-octal, zero and even connections raise PacCodecError."""
        with pytest.raises(PacCodecError):
            parse_octal_connection(text)

    def test_taps_must_start_and_end_with_one(self):
        """c_0 = c_m = 1."""
        with pytest.raises(ValidationError):
            ConvSpec(taps=(0, 1))
        with pytest.raises(ValidationError):
            ConvSpec(taps=(1, 0))


class TestRateProfile:
    """Index set views and validation."""

    def test_views(self):
        """1-based data_set maps to 0-based positions and a mask."""
        profile = RateProfile(n=8, k=4, data_set=(4, 6, 7, 8))
        assert profile.positions == (3, 5, 6, 7)
        assert profile.frozen_positions == (0, 1, 2, 4)
        assert profile.data_mask.tolist() == [False, False, False, True, False, True, True, True]
        assert profile.rate == Fraction(1, 2)

    def test_from_positions_sorts(self):
        """Positions in any order give an ascending data_set."""
        profile = RateProfile.from_positions(8, [7, 3, 5])
        assert profile.data_set == (4, 6, 8)
        assert profile.k == 3

    @pytest.mark.parametrize(
        "n,k,data_set",
        [
            (6, 1, (1,)),
            (8, 2, (1,)),
            (8, 2, (3, 2)),
            (8, 2, (3, 3)),
            (8, 1, (9,)),
            (8, 1, (0,)),
        ],
    )
    def test_invalid_profiles(self, n, k, data_set):
        """Bad N, counts, ordering and ranges are rejected."""
        with pytest.raises(ValidationError):
            RateProfile(n=n, k=k, data_set=data_set)

    def test_empty_profile(self):
        """K = 0 is allowed."""
        assert RateProfile(n=4, k=0, data_set=()).frozen_positions == (0, 1, 2, 3)


class TestPacCodeSpec:
    """Bias vector checks."""

    def test_dimensions(self, pac_8_4):
        """n, k and rate come from the profile."""
        assert (pac_8_4.n, pac_8_4.k, pac_8_4.rate) == (8, 4, Fraction(1, 2))

    def test_bias_count_must_match_n(self, pac_8_4):
        """One bias per bit channel."""
        with pytest.raises(ValidationError):
            PacCodeSpec(profile=pac_8_4.profile, conv=pac_8_4.conv, biases=(0.5,) * 7)

    def test_bias_range(self, pac_8_4):
        """Biases lie in [0, 1]."""
        with pytest.raises(ValidationError):
            PacCodeSpec(profile=pac_8_4.profile, conv=pac_8_4.conv, biases=(1.5,) * 8)
