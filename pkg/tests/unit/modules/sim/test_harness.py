"""
Unit tests for the Monte-Carlo harness and CSV output.

Most tests use the uncoded runner so the stopping rule and bookkeeping are
exercised without decoder cost.
"""

import io

import pytest

from rspac.modules.sim import (
    CSV_HEADER,
    SchemeId,
    SimConfig,
    SimRecord,
    SimulationError,
    UncodedRunner,
    emit_csv,
    parse_csv,
    run_point,
    run_sweep,
    write_csv,
)


def _uncoded(**overrides) -> SimConfig:
    values = {"scheme": "uncoded", "uncoded_frame_bits": 64, "seed": 3}
    values.update(overrides)
    return SimConfig.load(**values)


def _record(snr: float, **fields) -> SimRecord:
    values = dict(
        snr_db=snr, frames=10, bit_errors=5, frame_errors=2, ber=0.00123456789, fer=0.2, anv=1.5
    )
    values.update(fields)
    return SimRecord(**values)


class TestStoppingRule:
    """Bit-error target and frame cap."""

    def test_stops_on_the_frame_reaching_the_target(self):
        """The last counted frame is the first to push errors to the target."""
        cfg = _uncoded(target_bit_errors=50)
        record = run_point(cfg, 0.0)
        runner = UncodedRunner(64)
        ch = runner.channel(0.0)
        per_frame = [runner.simulate_frame(3, f, ch).bit_errors for f in range(record.frames)]
        assert sum(per_frame) == record.bit_errors >= 50
        assert sum(per_frame[:-1]) < 50

    def test_frame_cap(self):
        """At high SNR the cap ends the point."""
        record = run_point(_uncoded(max_frames=7), 12.0)
        assert record.frames == 7
        assert record.bit_errors == 0
        assert record.ber == 0.0
        assert record.anv == 0.0

    def test_rates(self):
        """ber = errors / (frames * data bits), fer = frame errors / frames."""
        record = run_point(_uncoded(target_bit_errors=40), 1.0)
        assert record.ber == pytest.approx(record.bit_errors / (record.frames * 64))
        assert record.fer == pytest.approx(record.frame_errors / record.frames)

    def test_deterministic(self):
        """Repeated runs give the same counters."""
        cfg = _uncoded(target_bit_errors=30)
        first, second = run_point(cfg, 2.0), run_point(cfg, 2.0)
        strip = {"wall_seconds"}
        assert first.model_dump(exclude=strip) == second.model_dump(exclude=strip)


class TestRunners:
    """Supplied runners and sweeps."""

    def test_mismatched_runner(self):
        """A runner for another scheme is refused."""
        with pytest.raises(SimulationError):
            run_point(SimConfig(scheme=SchemeId.RS_CC), 1.0, runner=UncodedRunner(64))

    def test_sweep_sorted(self):
        """Points come back in ascending SNR order."""
        records = run_sweep(_uncoded(snr_db=[3.0, 1.0, 2.0], max_frames=3))
        assert [r.snr_db for r in records] == [1.0, 2.0, 3.0]


class TestCsv:
    """Result files."""

    def test_header_and_format(self):
        """Sorted rows, reals to 6 significant digits."""
        stream = io.StringIO()
        write_csv([_record(2.5), _record(1.0)], stream)
        lines = stream.getvalue().splitlines()
        assert lines[0] == ",".join(CSV_HEADER)
        assert lines[1].startswith("1,10,5,2,0.00123457,0.2,1.5,")
        assert lines[2].startswith("2.5,")

    def test_emit_and_parse(self, tmp_path):
        """Parsed records match the emitted ones up to the printed precision."""
        path = emit_csv([_record(1.0), _record(2.0, frames=4)], tmp_path / "out" / "r.csv")
        records = parse_csv(path)
        assert [r.frames for r in records] == [10, 4]
        assert records[0].ber == pytest.approx(0.00123457)

    def test_bad_header(self, tmp_path):
        """Foreign CSV files are refused."""
        path = tmp_path / "x.csv"
        path.write_text("a,b\n1,2\n")
        with pytest.raises(SimulationError):
            parse_csv(path)

    def test_bad_row(self, tmp_path):
        """Non-numeric cells are refused."""
        path = tmp_path / "x.csv"
        path.write_text(",".join(CSV_HEADER) + "\n1,ten,0,0,0,0,0,0\n")
        with pytest.raises(SimulationError):
            parse_csv(path)
