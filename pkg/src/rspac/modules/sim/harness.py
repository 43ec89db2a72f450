"""
Monte-Carlo BER/FER/ANV measurement.

Frames are simulated in batches, optionally across worker processes, and
folded into the counters in frame order. The stopping rule is checked after
every frame, so the frames counted (and therefore every counter) are the
same for any worker count.
"""

import csv
import logging
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from pathlib import Path
from typing import Iterable, Optional, TextIO, Union

from rspac.infrastructure.interfaces import BiasCache
from rspac.modules.sim.models import ChannelSpec, SimConfig, SimRecord, SimulationError
from rspac.modules.sim.runners import FrameOutcome, SchemeRunner, build_runner

logger = logging.getLogger(__name__)

CSV_HEADER = ["snr_db", "frames", "bit_errors", "frame_errors", "ber", "fer", "anv", "wall_seconds"]

FRAMES_PER_TASK = 4


def _chunks(indices: list[int], parts: int) -> list[list[int]]:
    size = max(1, -(-len(indices) // parts))
    return [indices[i : i + size] for i in range(0, len(indices), size)]


def _simulate_batch(
    runner: SchemeRunner,
    seed: int,
    indices: list[int],
    ch: ChannelSpec,
    executor: Optional[Executor],
    workers: int,
) -> list[FrameOutcome]:
    if executor is None or workers == 1:
        return runner.simulate_frames(seed, indices, ch)
    futures = [
        executor.submit(runner.simulate_frames, seed, chunk, ch)
        for chunk in _chunks(indices, workers)
    ]
    outcomes: list[FrameOutcome] = []
    for future in futures:
        outcomes.extend(future.result())
    return outcomes


def _run_point(
    runner: SchemeRunner,
    cfg: SimConfig,
    snr_db: float,
    executor: Optional[Executor],
) -> SimRecord:
    ch = runner.channel(snr_db)
    batch = cfg.workers * FRAMES_PER_TASK
    logger.info(
        f"Simulating {cfg.scheme.value} at {snr_db} dB (sigma={ch.sigma:.5g})",
        extra={"scheme": cfg.scheme.value, "snr_db": snr_db},
    )
    start = time.perf_counter()
    frames = bit_errors = frame_errors = 0
    visits = inner_decodes = rs_failures = exhausted = 0
    next_frame = 0
    while frames < cfg.max_frames and bit_errors < cfg.target_bit_errors:
        stop = min(next_frame + batch, cfg.max_frames)
        indices = list(range(next_frame, stop))
        for outcome in _simulate_batch(runner, cfg.seed, indices, ch, executor, cfg.workers):
            frames += 1
            bit_errors += outcome.bit_errors
            frame_errors += int(outcome.frame_error)
            visits += outcome.visits
            inner_decodes += outcome.inner_decodes
            rs_failures += outcome.rs_failures
            exhausted += outcome.budget_exhausted
            if bit_errors >= cfg.target_bit_errors:
                break
        next_frame = stop

    if runner.fixed_anv is not None:
        anv = runner.fixed_anv
    else:
        anv = visits / (inner_decodes * runner.inner_length) if inner_decodes else 0.0
    record = SimRecord(
        snr_db=snr_db,
        frames=frames,
        bit_errors=bit_errors,
        frame_errors=frame_errors,
        ber=bit_errors / (frames * runner.data_bits),
        fer=frame_errors / frames,
        anv=anv,
        wall_seconds=time.perf_counter() - start,
        rs_failures=rs_failures,
        budget_exhausted=exhausted,
    )
    logger.info(
        f"{cfg.scheme.value} @ {snr_db} dB: frames={frames} bit_errors={bit_errors} "
        f"ber={record.ber:.3e} fer={record.fer:.3e} anv={record.anv:.3f}",
        extra={"scheme": cfg.scheme.value, "snr_db": snr_db, "frames": frames},
    )
    if rs_failures:
        logger.warning(f"{rs_failures} RS decoding failures at {snr_db} dB")
    if exhausted:
        logger.warning(f"{exhausted} sequential decodes ran out of visits at {snr_db} dB")
    return record


def _resolve_runner(
    cfg: SimConfig, cache: Optional[BiasCache], runner: Optional[SchemeRunner]
) -> SchemeRunner:
    if runner is None:
        return build_runner(cfg, cache)
    if runner.scheme != cfg.scheme:
        raise SimulationError(
            f"runner simulates {runner.scheme.value}, config asks for {cfg.scheme.value}"
        )
    return runner


def run_point(
    cfg: SimConfig,
    snr_db: float,
    cache: Optional[BiasCache] = None,
    runner: Optional[SchemeRunner] = None,
) -> SimRecord:
    """
    Simulate one SNR point until the bit-error target or the frame cap is hit.

    Raises:
        ConfigError: if the configuration cannot be turned into a scheme
        SimulationError: if a supplied runner is for another scheme
    """
    runner = _resolve_runner(cfg, cache, runner)
    if cfg.workers == 1:
        return _run_point(runner, cfg, snr_db, None)
    with ProcessPoolExecutor(max_workers=cfg.workers) as executor:
        return _run_point(runner, cfg, snr_db, executor)


def run_sweep(
    cfg: SimConfig,
    cache: Optional[BiasCache] = None,
    runner: Optional[SchemeRunner] = None,
) -> list[SimRecord]:
    """Every SNR point of the config, in ascending SNR order."""
    runner = _resolve_runner(cfg, cache, runner)
    snrs = sorted(cfg.snr_db)
    if cfg.workers == 1:
        return [_run_point(runner, cfg, snr, None) for snr in snrs]
    with ProcessPoolExecutor(max_workers=cfg.workers) as executor:
        return [_run_point(runner, cfg, snr, executor) for snr in snrs]


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def write_csv(records: Iterable[SimRecord], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in sorted(records, key=lambda rec: rec.snr_db):
        writer.writerow(
            [
                _fmt(r.snr_db),
                r.frames,
                r.bit_errors,
                r.frame_errors,
                _fmt(r.ber),
                _fmt(r.fer),
                _fmt(r.anv),
                _fmt(r.wall_seconds),
            ]
        )


def emit_csv(records: Iterable[SimRecord], path: Union[str, Path]) -> Path:
    """Write records sorted by SNR, reals to 6 significant digits."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as f:
        write_csv(records, f)
    return path


def parse_csv(path: Union[str, Path]) -> list[SimRecord]:
    """Read records back from an emitted CSV file."""
    with Path(path).open(encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames != CSV_HEADER:
            raise SimulationError(f"unexpected CSV header {reader.fieldnames}")
        try:
            return [
                SimRecord(
                    snr_db=float(row["snr_db"]),
                    frames=int(row["frames"]),
                    bit_errors=int(row["bit_errors"]),
                    frame_errors=int(row["frame_errors"]),
                    ber=float(row["ber"]),
                    fer=float(row["fer"]),
                    anv=float(row["anv"]),
                    wall_seconds=float(row["wall_seconds"]),
                )
                for row in reader
            ]
        except (ValueError, TypeError) as e:
            raise SimulationError(f"malformed CSV row in {path}: {e}") from e
