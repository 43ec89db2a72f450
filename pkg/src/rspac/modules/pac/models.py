"""
PAC code parameters: rate profiles, convolutional precoders, code specs and
decoder results.

Rate profiles keep the 1-based index set used by profile files
(``data_set``); code paths use the 0-based ``positions`` view.
"""

from fractions import Fraction
from typing import Optional

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from rspac.exceptions import RspacError
from rspac.modules.polar import is_power_of_two


class PacCodecError(RspacError, ValueError):
    """Raised on invalid profiles, taps, profile files or input lengths."""
    pass


class RateProfile(BaseModel):
    """Data index set A of an (N, K) PAC code."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Code length N (power of two)")
    k: int = Field(..., ge=0, description="Number of data bits K")
    data_set: tuple[int, ...] = Field(..., description="1-based data indices, ascending")

    @model_validator(mode="after")
    def _check_indices(self) -> "RateProfile":
        if not is_power_of_two(self.n):
            raise ValueError(f"N={self.n} is not a power of two")
        if len(self.data_set) != self.k:
            raise ValueError(f"profile lists {len(self.data_set)} indices for K={self.k}")
        if any(b <= a for a, b in zip(self.data_set, self.data_set[1:])):
            raise ValueError("data indices must be strictly increasing")
        if self.data_set and not (1 <= self.data_set[0] and self.data_set[-1] <= self.n):
            raise ValueError(f"data indices must lie in [1, {self.n}]")
        return self

    @classmethod
    def from_positions(cls, n: int, positions: list[int]) -> "RateProfile":
        """Build from 0-based positions in any order."""
        return cls(n=n, k=len(positions), data_set=tuple(sorted(p + 1 for p in positions)))

    @property
    def positions(self) -> tuple[int, ...]:
        """0-based data positions."""
        return tuple(i - 1 for i in self.data_set)

    @property
    def frozen_positions(self) -> tuple[int, ...]:
        data = set(self.positions)
        return tuple(i for i in range(self.n) if i not in data)

    @property
    def data_mask(self) -> NDArray[np.bool_]:
        mask = np.zeros(self.n, dtype=bool)
        mask[list(self.positions)] = True
        return mask

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)


class ConvSpec(BaseModel):
    """
    Rate-1 convolutional precoder c = (c_0, ..., c_m).

    u_i = sum_j c_j v_{i-j}; the Toeplitz matrix T is upper triangular with
    unit diagonal because c_0 = 1.
    """

    model_config = ConfigDict(frozen=True)

    taps: tuple[int, ...] = Field(..., min_length=1, description="Tap bits c_0..c_m")

    @field_validator("taps")
    @classmethod
    def _check_taps(cls, taps: tuple[int, ...]) -> tuple[int, ...]:
        if any(t not in (0, 1) for t in taps):
            raise ValueError("taps must be bits")
        if taps[0] != 1:
            raise ValueError("c_0 must be 1")
        if taps[-1] != 1:
            raise ValueError("last tap c_m must be 1")
        return taps

    @property
    def memory(self) -> int:
        return len(self.taps) - 1

    @classmethod
    def from_octal(cls, text: str) -> "ConvSpec":
        return parse_octal_connection(text)


def parse_octal_connection(text: str) -> ConvSpec:
    """
    Taps from an octal connection string, most significant bit = c_0.

    "3211" -> 11010001001 -> (1,1,0,1,0,0,0,1,0,0,1).

    Raises:
        PacCodecError: on non-octal characters, zero, or an even value (c_m = 0)
    """
    digits = text.strip()
    if not digits or any(ch not in "01234567" for ch in digits):
        raise PacCodecError(f"invalid octal connection {text!r}")
    value = int(digits, 8)
    if value == 0:
        raise PacCodecError("connection polynomial is zero")
    if value % 2 == 0:
        raise PacCodecError(f"connection {text!r} has c_m = 0")
    return ConvSpec(taps=tuple(int(b) for b in format(value, "b")))


class PacCodeSpec(BaseModel):
    """(N, K, A, c) PAC code together with its per-bit Fano metric biases."""

    model_config = ConfigDict(frozen=True)

    profile: RateProfile
    conv: ConvSpec
    biases: tuple[float, ...] = Field(..., description="Cutoff-rate bias per bit channel, bits")
    design_snr_db: Optional[float] = Field(
        default=None, description="Eb/N0 the biases were estimated at"
    )

    @model_validator(mode="after")
    def _check_biases(self) -> "PacCodeSpec":
        if len(self.biases) != self.profile.n:
            raise ValueError(f"{len(self.biases)} biases for N={self.profile.n}")
        if any(not 0.0 <= b <= 1.0 for b in self.biases):
            raise ValueError("biases must lie in [0, 1]")
        return self

    @property
    def n(self) -> int:
        return self.profile.n

    @property
    def k(self) -> int:
        return self.profile.k

    @property
    def rate(self) -> Fraction:
        return self.profile.rate


class FanoResult(BaseModel):
    """
    Outcome of one sequential decode.

    A completed decode visits every level at least once, so anv >= 1. Only a
    decode stopped by a visit budget below N reports anv < 1.
    """

    model_config = ConfigDict(frozen=True)

    decoded_v: tuple[int, ...] = Field(..., description="Decoded precoder input v")
    visits: int = Field(..., ge=0, description="Forward node arrivals")
    anv: float = Field(..., ge=0.0, description="visits / N")
    budget_exhausted: bool = Field(default=False)
    path_metric: float = Field(..., description="Fano metric of the returned path")
    threshold: float = Field(default=0.0, description="Running threshold when the search stopped")
