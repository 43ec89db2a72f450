"""
Concatenated scheme configurations and decode reports.
"""

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from rspac.exceptions import RspacError
from rspac.modules.cc import NASA_CC, CcSpec
from rspac.modules.pac import PacCodeSpec
from rspac.modules.rs import RS_240_208, RS_252_220, RS_255_223, RsCodeSpec


class ConcatError(RspacError, ValueError):
    """Raised when outer and inner codes do not fit together."""
    pass


class Scheme1Config(BaseModel):
    """
    RS outer code split into `blocks` groups, each group one inner PAC block.

    No interleaving: group i carries wire symbols i*spb .. (i+1)*spb - 1.
    """

    model_config = ConfigDict(frozen=True)

    rs: RsCodeSpec
    inner: PacCodeSpec
    blocks: int = Field(..., ge=1)
    symbols_per_block: int = Field(..., ge=1)
    systematic: bool = Field(default=True, description="Systematic inner encoder")

    @model_validator(mode="after")
    def _check_fit(self) -> "Scheme1Config":
        if self.rs.n != self.blocks * self.symbols_per_block:
            raise ValueError(
                f"rs.n={self.rs.n} != blocks * symbols_per_block = "
                f"{self.blocks} * {self.symbols_per_block}"
            )
        if self.inner.k != 8 * self.symbols_per_block:
            raise ValueError(f"inner K={self.inner.k} != 8 * {self.symbols_per_block}")
        return self

    @classmethod
    def create(cls, **kwargs) -> "Scheme1Config":
        """Build and report a mismatch as ConcatError."""
        try:
            return cls(**kwargs)
        except ValidationError as e:
            raise ConcatError(f"invalid scheme 1 configuration: {e}") from e

    @property
    def rate(self) -> Fraction:
        return Fraction(self.rs.k, self.rs.n) * self.inner.rate

    @property
    def data_bits(self) -> int:
        return 8 * self.rs.k


class InterleavedConfig(BaseModel):
    """D parallel RS codes, block interleaved, one inner block per column."""

    model_config = ConfigDict(frozen=True)

    depth: int = Field(..., ge=1, description="Interleaving depth D")
    rs: RsCodeSpec = RS_255_223
    inner: PacCodeSpec
    systematic: bool = Field(default=True, description="Systematic inner encoder")

    @model_validator(mode="after")
    def _check_fit(self) -> "InterleavedConfig":
        if self.inner.k != 8 * self.depth:
            raise ValueError(f"inner K={self.inner.k} != 8 * D = {8 * self.depth}")
        return self

    @classmethod
    def create(cls, **kwargs) -> "InterleavedConfig":
        try:
            return cls(**kwargs)
        except ValidationError as e:
            raise ConcatError(f"invalid interleaved configuration: {e}") from e

    @property
    def columns(self) -> int:
        return self.rs.n

    @property
    def rate(self) -> Fraction:
        return Fraction(self.rs.k, self.rs.n) * self.inner.rate

    @property
    def data_bits(self) -> int:
        return 8 * self.rs.k * self.depth


class RsCcConfig(BaseModel):
    """RS(255,223) x D, interleaved, one terminated CC block per frame."""

    model_config = ConfigDict(frozen=True)

    depth: int = Field(default=8, ge=1)
    rs: RsCodeSpec = RS_255_223
    cc: CcSpec = NASA_CC

    @property
    def stream_bits(self) -> int:
        return 8 * self.depth * self.rs.n

    @property
    def rate(self) -> Fraction:
        coded = 2 * (self.stream_bits + self.cc.memory)
        return Fraction(self.rs.k, self.rs.n) * Fraction(self.stream_bits, coded)

    @property
    def data_bits(self) -> int:
        return 8 * self.rs.k * self.depth


class Scheme1Layout(BaseModel):
    """Dimensions of a scheme 1 instance, before inner biases are known."""

    model_config = ConfigDict(frozen=True)

    name: str
    rs: RsCodeSpec
    inner_n: int
    inner_k: int
    blocks: int
    symbols_per_block: int


class InterleavedLayout(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    depth: int
    inner_n: int
    inner_k: int


SCHEME1_LAYOUTS: dict[tuple[int, int], Scheme1Layout] = {
    (64, 32): Scheme1Layout(
        name="rs252-pac64", rs=RS_252_220, inner_n=64, inner_k=32, blocks=63, symbols_per_block=4
    ),
    (128, 64): Scheme1Layout(
        name="rs240-pac128", rs=RS_240_208, inner_n=128, inner_k=64, blocks=30, symbols_per_block=8
    ),
    (256, 128): Scheme1Layout(
        name="rs240-pac256",
        rs=RS_240_208,
        inner_n=256,
        inner_k=128,
        blocks=15,
        symbols_per_block=16,
    ),
}

INTERLEAVED_LAYOUTS: dict[int, InterleavedLayout] = {
    8: InterleavedLayout(name="rs255x8-pac128", depth=8, inner_n=128, inner_k=64),
    4: InterleavedLayout(name="rs255x4-pac64", depth=4, inner_n=64, inner_k=32),
    5: InterleavedLayout(name="rs255x5-pac64-40", depth=5, inner_n=64, inner_k=40),
}


def scheme1_config(inner: PacCodeSpec, systematic: bool = True) -> Scheme1Config:
    """Scheme 1 instance matching the inner code's (N, K)."""
    layout = SCHEME1_LAYOUTS.get((inner.n, inner.k))
    if layout is None:
        raise ConcatError(f"no scheme 1 layout for inner PAC({inner.n},{inner.k})")
    return Scheme1Config.create(
        rs=layout.rs,
        inner=inner,
        blocks=layout.blocks,
        symbols_per_block=layout.symbols_per_block,
        systematic=systematic,
    )


def interleaved_config(
    depth: int, inner: PacCodeSpec, systematic: bool = True
) -> InterleavedConfig:
    return InterleavedConfig.create(depth=depth, inner=inner, systematic=systematic)


class ConcatDecodeResult(BaseModel):
    """Decoded data plus per-RS-word outcomes and inner decoder statistics."""

    model_config = ConfigDict(frozen=True)

    data: tuple[tuple[int, ...], ...] = Field(..., description="Data symbols, one row per RS word")
    rs_outcomes: tuple[Literal["corrected", "failure"], ...] = Field(...)
    rs_corrections: int = Field(default=0, ge=0, description="Symbols changed by the RS decoders")
    inner_visits: tuple[int, ...] = Field(default=(), description="Visits per inner decode")
    inner_exhausted: int = Field(default=0, ge=0, description="Inner decodes out of budget")

    @property
    def rs_failures(self) -> int:
        return sum(1 for o in self.rs_outcomes if o == "failure")

    @property
    def flat_data(self) -> list[int]:
        return [s for row in self.data for s in row]
