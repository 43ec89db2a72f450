"""
RS-PAC concatenation (with and without interleaving) and the RS-CC baseline.

On an RS decoding failure the data part of the decoder input is passed
through: the first k wire symbols of that RS word.
"""

import logging
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from rspac.modules.cc import cc_encode, viterbi_decode
from rspac.modules.concat.interleaver import BlockInterleaver, deinterleave, interleave
from rspac.modules.concat.models import (
    ConcatDecodeResult,
    ConcatError,
    InterleavedConfig,
    RsCcConfig,
    Scheme1Config,
)
from rspac.modules.concat.packing import (
    bits_to_bytes,
    bytes_to_bits,
    codeword_to_wire,
    wire_to_codeword,
)
from rspac.modules.pac import (
    DEFAULT_DELTA,
    DEFAULT_VISIT_BUDGET,
    PacCodeSpec,
    pac_decode,
    pac_encode,
)
from rspac.modules.rs import RsCodeSpec, RsCorrected, rs_decode, rs_encode_systematic

logger = logging.getLogger(__name__)


def _data_matrix(data: ArrayLike, rows: int, cols: int) -> NDArray[np.uint8]:
    arr = np.asarray(data, dtype=np.int64)
    if arr.size != rows * cols:
        raise ConcatError(f"expected {rows} x {cols} data symbols, got {arr.size}")
    if np.any((arr < 0) | (arr > 255)):
        raise ConcatError("data symbols must be bytes")
    return arr.reshape(rows, cols).astype(np.uint8)


def _encode_row(rs: RsCodeSpec, row: Sequence[int]) -> list[int]:
    return codeword_to_wire(rs, rs_encode_systematic(rs, [int(s) for s in row]))


def _decode_row(rs: RsCodeSpec, wire: Sequence[int]) -> tuple[list[int], str, int]:
    """Data symbols, outcome status and correction count of one RS word."""
    outcome = rs_decode(rs, wire_to_codeword(rs, [int(s) for s in wire]))
    if isinstance(outcome, RsCorrected):
        return list(outcome.codeword[rs.parity_len :]), outcome.status, outcome.error_count
    return [int(s) for s in wire[: rs.k]], outcome.status, 0


def _decode_rows(
    rs: RsCodeSpec, matrix: NDArray[np.uint8]
) -> tuple[list[list[int]], list[str], int]:
    data, outcomes, corrections = [], [], 0
    for wire in matrix:
        row, status, fixed = _decode_row(rs, wire.tolist())
        data.append(row)
        outcomes.append(status)
        corrections += fixed
    failures = outcomes.count("failure")
    if failures:
        logger.debug(f"{failures}/{len(outcomes)} RS words failed; passing deinterleaver output")
    return data, outcomes, corrections


def _inner_decode(
    inner: PacCodeSpec,
    frames: NDArray[np.float64],
    systematic: bool,
    delta: float,
    visit_budget: int,
) -> tuple[NDArray[np.uint8], list[int], int]:
    """Fano-decode every frame; returns (data bits per frame, visits, exhausted count)."""
    bits = np.zeros((frames.shape[0], inner.k), dtype=np.uint8)
    visits, exhausted = [], 0
    for i, frame in enumerate(frames):
        bits[i], result = pac_decode(
            inner, frame, delta=delta, visit_budget=visit_budget, systematic=systematic
        )
        visits.append(result.visits)
        exhausted += int(result.budget_exhausted)
    return bits, visits, exhausted


def _check_frames(frames: ArrayLike, count: int, length: int) -> NDArray[np.float64]:
    arr = np.asarray(frames, dtype=np.float64)
    if arr.shape != (count, length):
        raise ConcatError(f"expected LLR frames of shape ({count}, {length}), got {arr.shape}")
    return arr


# -- scheme 1: no interleaver ------------------------------------------------


def scheme1_encode(cfg: Scheme1Config, data: ArrayLike) -> NDArray[np.uint8]:
    """
    RS-encode k data symbols and PAC-encode each group of symbols_per_block.

    Returns:
        (blocks, N) codeword bits; blocks holding parity come last
    """
    row = _data_matrix(data, 1, cfg.rs.k)[0]
    wire = np.asarray(_encode_row(cfg.rs, row.tolist()), dtype=np.uint8)
    groups = bytes_to_bits(wire.reshape(cfg.blocks, cfg.symbols_per_block))
    return np.stack([pac_encode(cfg.inner, g, systematic=cfg.systematic) for g in groups])


def scheme1_decode_symbols(cfg: Scheme1Config, wire_symbols: ArrayLike) -> ConcatDecodeResult:
    """Outer stage of scheme 1 on already estimated wire symbols."""
    wire = np.asarray(wire_symbols, dtype=np.uint8).reshape(1, -1)
    if wire.shape[1] != cfg.rs.n:
        raise ConcatError(f"expected {cfg.rs.n} wire symbols, got {wire.shape[1]}")
    data, outcomes, corrections = _decode_rows(cfg.rs, wire)
    return ConcatDecodeResult(
        data=tuple(tuple(r) for r in data), rs_outcomes=tuple(outcomes), rs_corrections=corrections
    )


def scheme1_decode(
    cfg: Scheme1Config,
    llr_frames: ArrayLike,
    delta: float = DEFAULT_DELTA,
    visit_budget: int = DEFAULT_VISIT_BUDGET,
) -> ConcatDecodeResult:
    """Fano-decode each block, reassemble the RS word and RS-decode it."""
    frames = _check_frames(llr_frames, cfg.blocks, cfg.inner.n)
    bits, visits, exhausted = _inner_decode(cfg.inner, frames, cfg.systematic, delta, visit_budget)
    outer = scheme1_decode_symbols(cfg, bits_to_bytes(bits).reshape(-1))
    return outer.model_copy(update={"inner_visits": tuple(visits), "inner_exhausted": exhausted})


# -- scheme 2: depth-D interleaver -------------------------------------------


def scheme2_encode(cfg: InterleavedConfig, data: ArrayLike) -> NDArray[np.uint8]:
    """
    RS-encode each of the D rows, interleave, PAC-encode every column.

    Returns:
        (n, N) codeword bits, one inner block per column
    """
    rows = _data_matrix(data, cfg.depth, cfg.rs.k)
    matrix = np.asarray([_encode_row(cfg.rs, r.tolist()) for r in rows], dtype=np.uint8)
    columns = interleave(BlockInterleaver(rows=cfg.depth, cols=cfg.rs.n), matrix)
    return np.stack(
        [pac_encode(cfg.inner, bits, systematic=cfg.systematic) for bits in bytes_to_bits(columns)]
    )


def scheme2_decode_columns(cfg: InterleavedConfig, columns: ArrayLike) -> ConcatDecodeResult:
    """Outer stage of scheme 2 on already estimated columns of D bytes."""
    matrix = deinterleave(BlockInterleaver(rows=cfg.depth, cols=cfg.rs.n), columns)
    data, outcomes, corrections = _decode_rows(cfg.rs, matrix)
    return ConcatDecodeResult(
        data=tuple(tuple(r) for r in data), rs_outcomes=tuple(outcomes), rs_corrections=corrections
    )


def scheme2_decode(
    cfg: InterleavedConfig,
    llr_frames: ArrayLike,
    delta: float = DEFAULT_DELTA,
    visit_budget: int = DEFAULT_VISIT_BUDGET,
) -> ConcatDecodeResult:
    """Fano-decode columns, deinterleave, RS-decode each row with per-row fallback."""
    frames = _check_frames(llr_frames, cfg.columns, cfg.inner.n)
    bits, visits, exhausted = _inner_decode(cfg.inner, frames, cfg.systematic, delta, visit_budget)
    outer = scheme2_decode_columns(cfg, bits_to_bytes(bits))
    return outer.model_copy(update={"inner_visits": tuple(visits), "inner_exhausted": exhausted})


# -- RS-CC baseline ----------------------------------------------------------


def rs_cc_serialize(cfg: RsCcConfig, data: ArrayLike) -> NDArray[np.uint8]:
    """D RS codewords, read column by column into one bit stream."""
    rows = _data_matrix(data, cfg.depth, cfg.rs.k)
    matrix = np.asarray([_encode_row(cfg.rs, r.tolist()) for r in rows], dtype=np.uint8)
    columns = interleave(BlockInterleaver(rows=cfg.depth, cols=cfg.rs.n), matrix)
    return bytes_to_bits(columns).reshape(-1)


def rs_cc_encode(cfg: RsCcConfig, data: ArrayLike) -> NDArray[np.uint8]:
    """Serialize the interleaved RS words and CC-encode them as one terminated block."""
    return cc_encode(cfg.cc, rs_cc_serialize(cfg, data))


def rs_cc_decode_stream(cfg: RsCcConfig, stream_bits: ArrayLike) -> ConcatDecodeResult:
    """Outer stage of RS-CC on an estimated bit stream."""
    bits = np.asarray(stream_bits, dtype=np.uint8).reshape(-1)
    if bits.size != cfg.stream_bits:
        raise ConcatError(f"expected {cfg.stream_bits} stream bits, got {bits.size}")
    columns = bits_to_bytes(bits.reshape(cfg.rs.n, 8 * cfg.depth))
    matrix = deinterleave(BlockInterleaver(rows=cfg.depth, cols=cfg.rs.n), columns)
    data, outcomes, corrections = _decode_rows(cfg.rs, matrix)
    return ConcatDecodeResult(
        data=tuple(tuple(r) for r in data), rs_outcomes=tuple(outcomes), rs_corrections=corrections
    )


def rs_cc_decode(cfg: RsCcConfig, llrs: ArrayLike) -> ConcatDecodeResult:
    """Viterbi-decode the block, deinterleave and RS-decode each row."""
    return rs_cc_decode_stream(cfg, viterbi_decode(cfg.cc, llrs))
