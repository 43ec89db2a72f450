"""
Unit tests for simulation configuration and records.
"""

import pytest
from pydantic import ValidationError

from rspac.config import get_settings
from rspac.exceptions import ConfigError
from rspac.modules.sim import SchemeId, SimConfig, SimRecord


class TestDefaults:
    """Values falling back to Settings."""

    def test_defaults(self):
        """PAC at the default grid with Settings-provided decoder knobs."""
        cfg = SimConfig()
        assert cfg.scheme == SchemeId.PAC
        assert cfg.fano_delta == 2.0
        assert cfg.visit_budget == 1_000_000
        assert cfg.workers == 1
        assert cfg.inner_dims() == (64, 32)

    def test_environment_overrides_settings(self, monkeypatch):
        """RSPAC_* variables change the defaults."""
        monkeypatch.setenv("RSPAC_FANO_DELTA", "3.5")
        monkeypatch.setenv("RSPAC_WORKERS", "3")
        get_settings.cache_clear()
        cfg = SimConfig()
        assert cfg.fano_delta == 3.5
        assert cfg.workers == 3


class TestInnerDims:
    """Per-scheme inner code size."""

    @pytest.mark.parametrize(
        "depth,dims", [(8, (128, 64)), (4, (64, 32)), (5, (64, 40)), (6, (96, 48))]
    )
    def test_interleaved(self, depth, dims):
        """Known depths use the layout table, others N = 16 D."""
        assert SimConfig(scheme=SchemeId.RS_PAC_IL, depth=depth).inner_dims() == dims

    def test_explicit(self):
        """Given dimensions win."""
        assert SimConfig(inner_n=128, inner_k=64).inner_dims() == (128, 64)


class TestLoad:
    """TOML files and overrides."""

    def test_file_and_overrides(self, tmp_path):
        """Overrides beat the file; None overrides are ignored."""
        path = tmp_path / "run.toml"
        path.write_text('scheme = "rs-pac-il"\ndepth = 4\nsnr_db = [2.0, 2.5]\nseed = 9\n')
        cfg = SimConfig.load(path, seed=None, max_frames=10)
        assert cfg.scheme == SchemeId.RS_PAC_IL
        assert cfg.depth == 4
        assert cfg.snr_db == [2.0, 2.5]
        assert cfg.seed == 9
        assert cfg.max_frames == 10

    def test_to_toml_loads_back(self, tmp_path):
        """The printed effective config is a valid config file."""
        cfg = SimConfig.load(scheme="rs-pac-1", snr_db=[3.0], target_bit_errors=7)
        path = tmp_path / "effective.toml"
        path.write_text(cfg.to_toml())
        assert SimConfig.load(path) == cfg

    def test_missing_file(self, tmp_path):
        """An unreadable file is a ConfigError."""
        with pytest.raises(ConfigError):
            SimConfig.load(tmp_path / "missing.toml")

    def test_malformed_toml(self, tmp_path):
        """TOML syntax errors are ConfigErrors."""
        path = tmp_path / "bad.toml"
        path.write_text("scheme = \n")
        with pytest.raises(ConfigError):
            SimConfig.load(path)

    @pytest.mark.parametrize(
        "overrides",
        [
            {"colour": "blue"},
            {"scheme": "turbo"},
            {"inner_n": 64},
            {"scheme": "rs-cc", "depth": 4},
            {"snr_db": []},
            {"bias_samples": 500},
        ],
    )
    def test_invalid_values(self, overrides):
        """Unknown keys and invalid values raise ConfigError."""
        with pytest.raises(ConfigError):
            SimConfig.load(**overrides)


class TestSimRecord:
    """Record validation."""

    def test_rates_bounded(self):
        """BER and FER lie in [0, 1]."""
        with pytest.raises(ValidationError):
            SimRecord(snr_db=1.0, frames=1, bit_errors=2, frame_errors=1, ber=2.0, fer=1.0, anv=0)
