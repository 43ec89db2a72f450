"""
Unit tests for the successive-cancellation demapper.

Bit LLRs are checked against brute-force posteriors on small lengths, and
random commit/rewind sequences against straight replays.
"""

import itertools

import numpy as np
import pytest

from rspac.modules.polar import (
    LLR_SATURATION,
    DemapperState,
    PolarError,
    check_node,
    demapper_commit,
    demapper_init,
    demapper_next_llr,
    demapper_rewind,
    genie_bit_llrs,
    polar_transform,
    sc_replay,
    variable_node,
)


def _posterior_llr(channel_llrs: np.ndarray, prefix: list[int]) -> float:
    """log P(u_i = 0 | y, u_<i) / P(u_i = 1 | y, u_<i) by enumerating u_>i."""
    n = channel_llrs.size
    i = len(prefix)
    weights = [0.0, 0.0]
    for bit in (0, 1):
        for tail in itertools.product((0, 1), repeat=n - i - 1):
            x = polar_transform(np.array(prefix + [bit] + list(tail), dtype=np.uint8))
            # P(y | x) up to a common factor
            weights[bit] += float(np.exp(np.sum(0.5 * (1 - 2 * x.astype(float)) * channel_llrs)))
    return float(np.log(weights[0] / weights[1]))


class TestNodes:
    """Check and variable node updates."""

    def test_check_node_matches_exact_formula(self, rng):
        """box-plus equals log((1 + e^{a+b}) / (e^a + e^b))."""
        a, b = rng.normal(0, 3, 50), rng.normal(0, 3, 50)
        expected = np.logaddexp(0, a + b) - np.logaddexp(a, b)
        assert np.allclose(check_node(a, b), expected, atol=1e-12)

    def test_variable_node(self):
        """b + (1 - 2s) a."""
        out = variable_node(np.array([1.5, 1.5]), np.array([2.0, 2.0]), np.array([0, 1]))
        assert out.tolist() == [3.5, 0.5]

    def test_saturation(self):
        """Outputs are clipped to +-LLR_SATURATION."""
        out = variable_node(np.array([35.0]), np.array([35.0]), np.array([0]))
        assert out[0] == LLR_SATURATION


class TestDemapperLlrs:
    """Bit LLRs against brute-force posteriors."""

    def test_length_two(self):
        """L(u0) = L0 box-plus L1 and L(u1 | u0) = L1 + (1 - 2 u0) L0."""
        llrs = np.array([0.7, -1.3])
        state = DemapperState(llrs)
        first = state.next_llr(0)
        assert first == pytest.approx(float(check_node(llrs[:1], llrs[1:])[0]))
        state.commit(0, 1)
        assert state.next_llr(1) == pytest.approx(-1.3 - 0.7)

    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_matches_brute_force_posterior(self, rng, n):
        """Every bit LLR equals the exact posterior given the committed prefix."""
        for _ in range(5):
            llrs = rng.normal(0.5, 2.0, n)
            bits = rng.integers(0, 2, n).tolist()
            replay = sc_replay(llrs, bits)
            for i in range(n):
                assert replay[i] == pytest.approx(_posterior_llr(llrs, bits[:i]), abs=1e-9)

    def test_saturated_channel_gives_true_signs(self, rng):
        """Correct-sign saturated LLRs give each bit LLR the sign of the true u_i."""
        u = rng.integers(0, 2, 256, dtype=np.uint8)
        llrs = 1e6 * (1.0 - 2.0 * polar_transform(u).astype(float))
        replay = np.array(sc_replay(llrs, u.tolist()))
        assert np.all(np.sign(replay) == 1.0 - 2.0 * u)
        assert np.all(np.abs(replay) <= LLR_SATURATION)


class TestDemapperOrdering:
    """Access-order contract."""

    def test_out_of_order_request(self):
        """Only the frontier bit may be requested or committed."""
        state = DemapperState(np.zeros(8))
        with pytest.raises(PolarError):
            state.next_llr(1)
        with pytest.raises(PolarError):
            state.commit(1, 0)

    def test_bad_bit_and_rewind(self):
        """Non-binary commits and rewinds past the frontier raise."""
        state = DemapperState(np.zeros(4))
        with pytest.raises(PolarError):
            state.commit(0, 2)
        state.next_llr(0)
        state.commit(0, 1)
        with pytest.raises(PolarError):
            state.rewind(2)

    def test_request_past_end(self):
        """The frontier cannot move past N."""
        state = DemapperState(np.zeros(2))
        for i in range(2):
            state.next_llr(i)
            state.commit(i, 0)
        with pytest.raises(PolarError):
            state.next_llr(2)

    def test_committed_prefix_and_frontier(self):
        """frontier counts committed bits; rewind forgets the tail."""
        state = demapper_init(np.ones(8))
        for i, bit in enumerate([1, 0, 1]):
            demapper_next_llr(state, i)
            demapper_commit(state, i, bit)
        assert state.frontier == 3
        assert state.committed.tolist() == [1, 0, 1]
        demapper_rewind(state, 1)
        assert state.frontier == 1
        assert state.committed.tolist() == [1]


class TestRewind:
    """Rewind reproduces straight replays."""

    @pytest.mark.parametrize("n", [8, 64])
    def test_random_commit_rewind_sequences(self, rng, n):
        """After any rewind history, LLRs equal those of a fresh replay."""
        for _ in range(10):
            llrs = rng.normal(1.0, 2.0, n)
            state = DemapperState(llrs)
            bits: list[int] = []
            for _ in range(60):
                if bits and rng.random() < 0.3:
                    back = int(rng.integers(0, len(bits) + 1))
                    state.rewind(back)
                    bits = bits[:back]
                elif len(bits) < n:
                    i = len(bits)
                    got = state.next_llr(i)
                    expected = sc_replay(llrs, bits + [0])[i]
                    assert got == pytest.approx(expected, abs=1e-12)
                    bit = int(rng.integers(0, 2))
                    state.commit(i, bit)
                    bits.append(bit)

    def test_rewind_to_zero_restarts(self, rng):
        """Rewinding to 0 gives the LLR of bit 0 again."""
        llrs = rng.normal(0, 1, 16)
        state = DemapperState(llrs)
        first = state.next_llr(0)
        for i in range(16):
            if i:
                state.next_llr(i)
            state.commit(i, 1)
        state.rewind(0)
        assert state.next_llr(0) == first


class TestGenieLlrs:
    """Vectorized all-zero SC recursion."""

    def test_matches_zero_replay(self, rng):
        """Each row equals sc_replay with every bit committed as zero."""
        batch = rng.normal(2.0, 2.0, (4, 32))
        genie = genie_bit_llrs(batch)
        assert genie.shape == (4, 32)
        for row, expected in zip(batch, genie):
            assert np.allclose(sc_replay(row, [0] * 32), expected, atol=1e-12)
