"""
Simulation configuration, channel parameters and result records.
"""

import logging
import math
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from rspac.config import get_settings
from rspac.exceptions import ConfigError, RspacError
from rspac.modules.concat import INTERLEAVED_LAYOUTS

logger = logging.getLogger(__name__)


class SimulationError(RspacError, ValueError):
    """Raised when the harness is misused (mismatched runner, unreadable results)."""
    pass


class SchemeId(str, Enum):
    """Simulated coding schemes."""
    PAC = "pac"
    RS_PAC_1 = "rs-pac-1"
    RS_PAC_IL = "rs-pac-il"
    RS_CC = "rs-cc"
    UNCODED = "uncoded"


class ChannelSpec(BaseModel):
    """BPSK over AWGN at a given Eb/N0, Eb normalized by the overall rate."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ebn0_db: float
    overall_rate: Fraction = Field(..., description="Data bits per channel use")

    @field_validator("overall_rate")
    @classmethod
    def _check_rate(cls, rate: Fraction) -> Fraction:
        if not 0 < rate <= 1:
            raise ValueError(f"overall rate {rate} outside (0, 1]")
        return rate

    @property
    def sigma2(self) -> float:
        return 1.0 / (2.0 * float(self.overall_rate) * 10.0 ** (self.ebn0_db / 10.0))

    @property
    def sigma(self) -> float:
        return math.sqrt(self.sigma2)


def _settings_default(name: str):
    return lambda: getattr(get_settings(), name)


class SimConfig(BaseModel):
    """
    One simulation run: scheme, SNR grid, stopping rule and code parameters.

    Loaded from a TOML file with flag overrides applied on top. Unset inner
    dimensions resolve per scheme (see ``inner_dims``).
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    scheme: SchemeId = Field(default=SchemeId.PAC, description="Scheme to simulate")
    snr_db: list[float] = Field(default_factory=lambda: [2.0, 2.5, 3.0, 3.5], min_length=1)
    max_frames: int = Field(default=1_000_000, ge=1, description="Frame cap per SNR point")
    target_bit_errors: int = Field(default=200, ge=1, description="Stop after this many bit errors")
    seed: int = Field(default=1, ge=0, description="Root seed of all per-frame streams")
    fano_delta: float = Field(default_factory=_settings_default("fano_delta"), gt=0.0)
    visit_budget: int = Field(default_factory=_settings_default("visit_budget"), ge=1)
    workers: int = Field(default_factory=_settings_default("workers"), ge=1)
    profile_path: Optional[Path] = Field(default=None, description="Rate profile file")
    bias_path: Optional[Path] = Field(default=None, description="Bias file (skips estimation)")
    design_snr_db: Optional[float] = Field(default=None, description="Bias design Eb/N0")
    bias_samples: int = Field(default_factory=_settings_default("bias_samples"), ge=10_000)
    depth: int = Field(default=8, ge=1, description="Interleaving depth D")
    inner_n: Optional[int] = Field(default=None, description="Inner PAC length N")
    inner_k: Optional[int] = Field(default=None, description="Inner PAC data length K")
    conv_octal: str = Field(default="3211", description="Precoder connection, octal")
    systematic: bool = Field(default=True, description="Systematic inner PAC encoder")
    uncoded_frame_bits: int = Field(default=1024, ge=1, description="Bits per uncoded frame")
    output: Optional[Path] = Field(default=None, description="CSV output path")

    @model_validator(mode="after")
    def _check_scheme(self) -> "SimConfig":
        if (self.inner_n is None) != (self.inner_k is None):
            raise ValueError("inner_n and inner_k must be given together")
        if self.scheme == SchemeId.RS_CC and self.depth != 8:
            raise ValueError("rs-cc runs at interleaving depth 8")
        return self

    def inner_dims(self) -> tuple[int, int]:
        """(N, K) of the inner PAC code."""
        if self.inner_n is not None and self.inner_k is not None:
            return self.inner_n, self.inner_k
        if self.scheme == SchemeId.RS_PAC_IL:
            layout = INTERLEAVED_LAYOUTS.get(self.depth)
            if layout is not None:
                return layout.inner_n, layout.inner_k
            return 16 * self.depth, 8 * self.depth
        return 64, 32

    @classmethod
    def load(cls, path: Optional[Union[str, Path]] = None, **overrides: Any) -> "SimConfig":
        """
        Read a TOML config and apply overrides (None values are ignored).

        Raises:
            ConfigError: on unreadable/malformed TOML or invalid values
        """
        data: dict[str, Any] = {}
        if path is not None:
            try:
                with open(path, "rb") as f:
                    data = tomllib.load(f)
            except OSError as e:
                raise ConfigError(f"cannot read config file {path}: {e}") from e
            except tomllib.TOMLDecodeError as e:
                raise ConfigError(f"malformed config file {path}: {e}") from e
        data.update({k: v for k, v in overrides.items() if v is not None})
        try:
            cfg = cls(**data)
        except ValidationError as e:
            raise ConfigError(f"invalid simulation config: {e}") from e
        logger.debug(f"Loaded simulation config for scheme {cfg.scheme.value}")
        return cfg

    def to_toml(self) -> str:
        """Effective configuration in the config-file syntax (unset keys commented)."""
        lines = []
        for name, value in self.model_dump(mode="json").items():
            if value is None:
                lines.append(f"# {name} =")
            elif isinstance(value, bool):
                lines.append(f"{name} = {'true' if value else 'false'}")
            elif isinstance(value, str):
                lines.append(f'{name} = "{value}"')
            else:
                lines.append(f"{name} = {value}")
        return "\n".join(lines) + "\n"


class SimRecord(BaseModel):
    """Measured BER/FER/ANV at one SNR point."""

    model_config = ConfigDict(frozen=True)

    snr_db: float
    frames: int = Field(..., ge=0)
    bit_errors: int = Field(..., ge=0)
    frame_errors: int = Field(..., ge=0)
    ber: float = Field(..., ge=0.0, le=1.0)
    fer: float = Field(..., ge=0.0, le=1.0)
    anv: float = Field(..., ge=0.0, description="Mean visits per bit over inner decodes")
    wall_seconds: float = Field(default=0.0, ge=0.0)
    rs_failures: int = Field(default=0, ge=0, description="RS words that failed to decode")
    budget_exhausted: int = Field(default=0, ge=0, description="Inner decodes out of budget")
