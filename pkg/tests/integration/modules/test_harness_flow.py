"""
Integration tests for SNR sweeps through the harness.

Covers worker-count independence, the fixed and measured ANV conventions and
calibration of the channel against the uncoded BPSK curve.
"""

import numpy as np
import pytest

from rspac.modules.sim import (
    PacRunner,
    SchemeId,
    SimConfig,
    emit_csv,
    parse_csv,
    run_point,
    run_sweep,
    theoretical_uncoded_ber,
)


def _strip(record):
    return record.model_dump(exclude={"wall_seconds"})


@pytest.mark.integration
class TestHarnessFlow:
    """Sweeps with real runners."""

    def test_worker_count_does_not_change_results(self):
        """One and two workers count exactly the same frames and errors."""
        base = dict(scheme="uncoded", uncoded_frame_bits=128, target_bit_errors=60, seed=4)
        single = run_sweep(SimConfig.load(workers=1, snr_db=[1.0, 3.0], **base))
        double = run_sweep(SimConfig.load(workers=2, snr_db=[1.0, 3.0], **base))
        assert [_strip(r) for r in single] == [_strip(r) for r in double]

    def test_pac_worker_count_does_not_change_results(self, pac_64_32):
        """Sequential decoding statistics are also scheduling independent."""
        runner = PacRunner(pac_64_32, systematic=True, delta=2.0, visit_budget=100_000)
        cfg = dict(scheme="pac", target_bit_errors=10, max_frames=40, seed=8)
        single = run_point(SimConfig.load(workers=1, **cfg), 2.0, runner=runner)
        double = run_point(SimConfig.load(workers=2, **cfg), 2.0, runner=runner)
        assert _strip(single) == _strip(double)

    def test_pac_high_snr(self, pac_64_32):
        """At 30 dB PAC makes no errors and visits each bit once."""
        runner = PacRunner(pac_64_32, systematic=True, delta=2.0, visit_budget=1000)
        record = run_point(SimConfig(max_frames=20), 30.0, runner=runner)
        assert (record.frames, record.bit_errors, record.fer) == (20, 0, 0.0)
        assert record.anv == 1.0

    def test_pac_anv_grows_at_low_snr(self, pac_64_32):
        """More backtracking at 1 dB than at 4 dB."""
        runner = PacRunner(pac_64_32, systematic=True, delta=2.0, visit_budget=100_000)
        cfg = SimConfig(snr_db=[1.0, 4.0], max_frames=100, target_bit_errors=10**6)
        low, high = run_sweep(cfg, runner=runner)
        assert low.anv > high.anv >= 1.0

    def test_rs_cc_reports_trellis_anv(self):
        """The baseline's ANV is its 64 trellis states."""
        record = run_point(SimConfig(scheme=SchemeId.RS_CC, max_frames=1), 6.0)
        assert record.anv == 64.0
        assert record.bit_errors == 0

    def test_uncoded_matches_theory(self):
        """Measured uncoded BER agrees with Q(sqrt(2 Eb/N0)) at 4 dB."""
        cfg = SimConfig.load(scheme="uncoded", uncoded_frame_bits=1024, target_bit_errors=2000)
        record = run_point(cfg, 4.0)
        expected = float(theoretical_uncoded_ber(4.0))
        assert record.ber == pytest.approx(expected, rel=0.1)

    def test_csv_of_a_sweep(self, tmp_path):
        """An emitted sweep parses back with the same counters."""
        cfg = SimConfig.load(scheme="uncoded", snr_db=[2.0, 0.0], target_bit_errors=20)
        records = run_sweep(cfg)
        parsed = parse_csv(emit_csv(records, tmp_path / "sweep.csv"))
        assert [(r.snr_db, r.frames, r.bit_errors) for r in parsed] == [
            (r.snr_db, r.frames, r.bit_errors) for r in records
        ]
        assert np.all(np.diff([r.ber for r in parsed]) <= 0)
