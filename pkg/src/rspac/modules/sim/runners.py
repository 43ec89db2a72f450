"""
Per-scheme encoders, decoders and frame simulators.

A runner owns the immutable code configuration of one scheme. It encodes a
data frame, decodes channel LLRs back to data, and turns a (seed, frame
index, channel) triple into a FrameOutcome. Data and noise come from
separate per-frame streams, so any frame can be replayed on its own.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from rspac.config import get_settings
from rspac.exceptions import ConfigError
from rspac.infrastructure.file_impl import FileBiasCache, read_bias_file
from rspac.infrastructure.interfaces import BiasCache
from rspac.modules.cc import TRELLIS_ANV
from rspac.modules.concat import (
    ConcatDecodeResult,
    ConcatError,
    RsCcConfig,
    bits_to_bytes,
    bytes_to_bits,
    interleaved_config,
    rs_cc_decode,
    rs_cc_encode,
    scheme1_config,
    scheme1_decode,
    scheme1_encode,
    scheme2_decode,
    scheme2_encode,
)
from rspac.modules.pac import (
    PacCodecError,
    PacCodeSpec,
    build_pac_spec,
    default_profile,
    load_profile,
    pac_decode,
    pac_encode,
    parse_octal_connection,
)
from rspac.modules.sim.channel import awgn_llrs, bpsk_modulate, hard_decision
from rspac.modules.sim.models import ChannelSpec, SchemeId, SimConfig
from rspac.rng import Stream, frame_rng

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecodeStats:
    """Decoder-side counters of one frame."""
    visits: int = 0
    inner_decodes: int = 0
    rs_failures: int = 0
    budget_exhausted: int = 0


@dataclass(frozen=True)
class FrameOutcome:
    """Error and complexity counters of one simulated frame."""
    bit_errors: int
    frame_error: bool
    visits: int = 0
    inner_decodes: int = 0
    rs_failures: int = 0
    budget_exhausted: int = 0


class SchemeRunner(ABC):
    """
    Encodes, decodes and simulates frames of one coding scheme.

    Data frames are arrays of bits for the bit-level schemes and arrays of
    bytes (one row per RS word) for the RS-terminated ones.
    """

    scheme: SchemeId
    # ANV reported when the decoder is not sequential; None means measured
    fixed_anv: Optional[float] = None
    # length of one inner sequential decode
    inner_length: int = 1

    @property
    @abstractmethod
    def rate(self) -> Fraction:
        """Data bits per transmitted BPSK symbol."""

    @property
    @abstractmethod
    def data_bits(self) -> int:
        """Data bits per frame."""

    @abstractmethod
    def random_data(self, rng: np.random.Generator) -> NDArray[np.uint8]:
        ...

    @abstractmethod
    def encode(self, data: ArrayLike) -> NDArray[np.uint8]:
        """Coded bits of one data frame."""

    @abstractmethod
    def decode(self, llrs: ArrayLike) -> tuple[NDArray[np.uint8], DecodeStats]:
        """Data estimate of one frame of channel LLRs shaped like ``encode`` output."""

    @abstractmethod
    def data_from_bytes(self, payload: bytes) -> NDArray[np.uint8]:
        """One data frame from a byte payload, zero padded."""

    @abstractmethod
    def data_to_bytes(self, data: ArrayLike) -> bytes:
        ...

    def count_bit_errors(self, sent: ArrayLike, decoded: ArrayLike) -> int:
        return int(np.count_nonzero(np.asarray(sent) != np.asarray(decoded)))

    @property
    def payload_bytes(self) -> int:
        """Bytes carried by one frame."""
        return -(-self.data_bits // 8)

    def channel(self, ebn0_db: float) -> ChannelSpec:
        return ChannelSpec(ebn0_db=ebn0_db, overall_rate=self.rate)

    def simulate_frame(self, seed: int, frame_index: int, ch: ChannelSpec) -> FrameOutcome:
        data = self.random_data(frame_rng(seed, frame_index, Stream.DATA))
        symbols = bpsk_modulate(self.encode(data))
        llrs = awgn_llrs(symbols, ch, frame_rng(seed, frame_index, Stream.NOISE))
        decoded, stats = self.decode(llrs)
        errors = self.count_bit_errors(data, decoded)
        if stats.budget_exhausted or stats.rs_failures:
            logger.debug(
                f"Frame {frame_index}: {stats.rs_failures} RS failures, "
                f"{stats.budget_exhausted} inner decodes out of budget"
            )
        return FrameOutcome(
            bit_errors=errors,
            frame_error=errors > 0 or stats.budget_exhausted > 0,
            visits=stats.visits,
            inner_decodes=stats.inner_decodes,
            rs_failures=stats.rs_failures,
            budget_exhausted=stats.budget_exhausted,
        )

    def simulate_frames(
        self, seed: int, frame_indices: Sequence[int], ch: ChannelSpec
    ) -> list[FrameOutcome]:
        return [self.simulate_frame(seed, f, ch) for f in frame_indices]

    def _payload_array(self, payload: bytes) -> NDArray[np.uint8]:
        if len(payload) > self.payload_bytes:
            raise ConfigError(
                f"{self.scheme.value} frames carry {self.payload_bytes} bytes, "
                f"got {len(payload)}"
            )
        padded = np.zeros(self.payload_bytes, dtype=np.uint8)
        padded[: len(payload)] = np.frombuffer(payload, dtype=np.uint8)
        return padded


class _BitRunner(SchemeRunner):
    """Schemes whose data frame is a flat bit vector."""

    def random_data(self, rng: np.random.Generator) -> NDArray[np.uint8]:
        return rng.integers(0, 2, self.data_bits, dtype=np.uint8)

    def data_from_bytes(self, payload: bytes) -> NDArray[np.uint8]:
        return bytes_to_bits(self._payload_array(payload))[: self.data_bits]

    def data_to_bytes(self, data: ArrayLike) -> bytes:
        bits = np.zeros(8 * self.payload_bytes, dtype=np.uint8)
        bits[: self.data_bits] = np.asarray(data, dtype=np.uint8).reshape(-1)
        return bits_to_bytes(bits).tobytes()


class PacRunner(_BitRunner):
    """Standalone PAC code with Fano decoding."""

    scheme = SchemeId.PAC

    def __init__(self, spec: PacCodeSpec, systematic: bool, delta: float, visit_budget: int):
        self.spec = spec
        self.systematic = systematic
        self.delta = delta
        self.visit_budget = visit_budget
        self.inner_length = spec.n

    @property
    def rate(self) -> Fraction:
        return self.spec.rate

    @property
    def data_bits(self) -> int:
        return self.spec.k

    def encode(self, data: ArrayLike) -> NDArray[np.uint8]:
        return pac_encode(self.spec, data, systematic=self.systematic)

    def decode(self, llrs: ArrayLike) -> tuple[NDArray[np.uint8], DecodeStats]:
        decoded, result = pac_decode(
            self.spec, llrs, self.delta, self.visit_budget, systematic=self.systematic
        )
        return decoded, DecodeStats(
            visits=result.visits,
            inner_decodes=1,
            budget_exhausted=int(result.budget_exhausted),
        )


class _OuterRsRunner(SchemeRunner):
    """Shared bookkeeping for schemes that end in RS decoding."""

    data_shape: tuple[int, int]

    def random_data(self, rng: np.random.Generator) -> NDArray[np.uint8]:
        return rng.integers(0, 256, self.data_shape, dtype=np.uint8)

    def count_bit_errors(self, sent: ArrayLike, decoded: ArrayLike) -> int:
        diff = np.bitwise_xor(
            np.asarray(sent, dtype=np.uint8), np.asarray(decoded, dtype=np.uint8)
        )
        return int(np.unpackbits(diff).sum())

    def data_from_bytes(self, payload: bytes) -> NDArray[np.uint8]:
        return self._payload_array(payload).reshape(self.data_shape)

    def data_to_bytes(self, data: ArrayLike) -> bytes:
        return np.asarray(data, dtype=np.uint8).reshape(-1).tobytes()

    @staticmethod
    def _unpack(result: ConcatDecodeResult) -> tuple[NDArray[np.uint8], DecodeStats]:
        return np.asarray(result.data, dtype=np.uint8), DecodeStats(
            visits=sum(result.inner_visits),
            inner_decodes=len(result.inner_visits),
            rs_failures=result.rs_failures,
            budget_exhausted=result.inner_exhausted,
        )


class Scheme1Runner(_OuterRsRunner):
    """RS outer code, one PAC block per symbol group, no interleaver."""

    scheme = SchemeId.RS_PAC_1

    def __init__(self, inner: PacCodeSpec, systematic: bool, delta: float, visit_budget: int):
        self.cfg = scheme1_config(inner, systematic=systematic)
        self.delta = delta
        self.visit_budget = visit_budget
        self.inner_length = inner.n
        self.data_shape = (1, self.cfg.rs.k)

    @property
    def rate(self) -> Fraction:
        return self.cfg.rate

    @property
    def data_bits(self) -> int:
        return self.cfg.data_bits

    def encode(self, data: ArrayLike) -> NDArray[np.uint8]:
        return scheme1_encode(self.cfg, data)

    def decode(self, llrs: ArrayLike) -> tuple[NDArray[np.uint8], DecodeStats]:
        return self._unpack(scheme1_decode(self.cfg, llrs, self.delta, self.visit_budget))


class InterleavedRunner(_OuterRsRunner):
    """D parallel RS(255,223) codes, block interleaved, PAC per column."""

    scheme = SchemeId.RS_PAC_IL

    def __init__(
        self, depth: int, inner: PacCodeSpec, systematic: bool, delta: float, visit_budget: int
    ):
        self.cfg = interleaved_config(depth, inner, systematic=systematic)
        self.delta = delta
        self.visit_budget = visit_budget
        self.inner_length = inner.n
        self.data_shape = (depth, self.cfg.rs.k)

    @property
    def rate(self) -> Fraction:
        return self.cfg.rate

    @property
    def data_bits(self) -> int:
        return self.cfg.data_bits

    def encode(self, data: ArrayLike) -> NDArray[np.uint8]:
        return scheme2_encode(self.cfg, data)

    def decode(self, llrs: ArrayLike) -> tuple[NDArray[np.uint8], DecodeStats]:
        return self._unpack(scheme2_decode(self.cfg, llrs, self.delta, self.visit_budget))


class RsCcRunner(_OuterRsRunner):
    """RS(255,223) x 8 with the 64-state convolutional code."""

    scheme = SchemeId.RS_CC
    fixed_anv = float(TRELLIS_ANV)

    def __init__(self, depth: int = 8):
        self.cfg = RsCcConfig(depth=depth)
        self.data_shape = (depth, self.cfg.rs.k)

    @property
    def rate(self) -> Fraction:
        return self.cfg.rate

    @property
    def data_bits(self) -> int:
        return self.cfg.data_bits

    def encode(self, data: ArrayLike) -> NDArray[np.uint8]:
        return rs_cc_encode(self.cfg, data)

    def decode(self, llrs: ArrayLike) -> tuple[NDArray[np.uint8], DecodeStats]:
        return self._unpack(rs_cc_decode(self.cfg, llrs))


class UncodedRunner(_BitRunner):
    """Hard-decision uncoded BPSK."""

    scheme = SchemeId.UNCODED
    fixed_anv = 0.0

    def __init__(self, frame_bits: int):
        self.frame_bits = frame_bits

    @property
    def rate(self) -> Fraction:
        return Fraction(1)

    @property
    def data_bits(self) -> int:
        return self.frame_bits

    def encode(self, data: ArrayLike) -> NDArray[np.uint8]:
        return np.asarray(data, dtype=np.uint8).reshape(-1)

    def decode(self, llrs: ArrayLike) -> tuple[NDArray[np.uint8], DecodeStats]:
        return hard_decision(llrs), DecodeStats()


def build_inner_spec(cfg: SimConfig, cache: Optional[BiasCache] = None) -> PacCodeSpec:
    """
    Inner PAC code of a config: profile file or default profile, bias file or
    cached/estimated biases.

    Raises:
        ConfigError: if a profile or bias file is invalid or does not match (N, K)
    """
    settings = get_settings()
    n, k = cfg.inner_dims()
    try:
        profile = load_profile(cfg.profile_path) if cfg.profile_path else None
        if profile is not None and (profile.n, profile.k) != (n, k):
            raise ConfigError(f"profile is ({profile.n},{profile.k}) but inner code is ({n},{k})")
        if cfg.bias_path is not None:
            key, biases = read_bias_file(cfg.bias_path)
            if (key.n, key.k) != (n, k):
                raise ConfigError(f"bias file is for ({key.n},{key.k}), inner code is ({n},{k})")
            return PacCodeSpec(
                profile=profile or default_profile(n, k),
                conv=parse_octal_connection(cfg.conv_octal),
                biases=tuple(biases),
                design_snr_db=key.design_snr_db,
            )
        return build_pac_spec(
            n,
            k,
            conv_octal=cfg.conv_octal,
            design_snr_db=cfg.design_snr_db,
            samples=cfg.bias_samples,
            seed=settings.bias_seed,
            cache=cache if cache is not None else FileBiasCache(settings.cache_dir),
            profile=profile,
        )
    except PacCodecError as e:
        raise ConfigError(f"invalid inner code: {e}") from e


def build_runner(cfg: SimConfig, cache: Optional[BiasCache] = None) -> SchemeRunner:
    """
    Runner for the configured scheme.

    Raises:
        ConfigError: on incompatible outer/inner dimensions or bad code files
    """
    if cfg.scheme == SchemeId.UNCODED:
        return UncodedRunner(cfg.uncoded_frame_bits)
    if cfg.scheme == SchemeId.RS_CC:
        return RsCcRunner(cfg.depth)
    inner = build_inner_spec(cfg, cache)
    try:
        if cfg.scheme == SchemeId.PAC:
            return PacRunner(inner, cfg.systematic, cfg.fano_delta, cfg.visit_budget)
        if cfg.scheme == SchemeId.RS_PAC_1:
            return Scheme1Runner(inner, cfg.systematic, cfg.fano_delta, cfg.visit_budget)
        return InterleavedRunner(
            cfg.depth, inner, cfg.systematic, cfg.fano_delta, cfg.visit_budget
        )
    except ConcatError as e:
        raise ConfigError(str(e)) from e
