"""
BPSK/AWGN Monte-Carlo harness: channel, per-scheme runners, SNR sweeps and CSV.
"""

from rspac.modules.sim.channel import (
    awgn_llrs,
    bpsk_modulate,
    hard_decision,
    theoretical_uncoded_ber,
)
from rspac.modules.sim.harness import (
    CSV_HEADER,
    emit_csv,
    parse_csv,
    run_point,
    run_sweep,
    write_csv,
)
from rspac.modules.sim.models import ChannelSpec, SchemeId, SimConfig, SimRecord, SimulationError
from rspac.modules.sim.runners import (
    DecodeStats,
    FrameOutcome,
    InterleavedRunner,
    PacRunner,
    RsCcRunner,
    Scheme1Runner,
    SchemeRunner,
    UncodedRunner,
    build_inner_spec,
    build_runner,
)

__all__ = [
    "awgn_llrs",
    "bpsk_modulate",
    "hard_decision",
    "theoretical_uncoded_ber",
    "CSV_HEADER",
    "emit_csv",
    "parse_csv",
    "run_point",
    "run_sweep",
    "write_csv",
    "ChannelSpec",
    "SchemeId",
    "SimConfig",
    "SimRecord",
    "SimulationError",
    "DecodeStats",
    "FrameOutcome",
    "InterleavedRunner",
    "PacRunner",
    "RsCcRunner",
    "Scheme1Runner",
    "SchemeRunner",
    "UncodedRunner",
    "build_inner_spec",
    "build_runner",
]
