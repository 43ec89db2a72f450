"""
Test configuration and shared fixtures.

This file provides the core testing infrastructure:
- Settings isolation (cache directory under tmp_path, fresh get_settings)
- Seeded numpy generators
- Standard PAC code specs with flat or estimated biases
"""

import numpy as np
import pytest

from rspac.config import get_settings
from rspac.infrastructure import MemoryBiasCache
from rspac.modules.pac import PacCodeSpec, build_pac_spec
from tests.factories import PacCodeSpecFactory

# ==========================================
# 0. Test Environment Setup
# ==========================================


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """
    Point every Settings-driven path at tmp_path and drop the cached instance.

    Bias files written by code under test land in a per-test cache directory.
    """
    monkeypatch.setenv("RSPAC_CACHE_DIR", str(tmp_path / "bias-cache"))
    monkeypatch.delenv("RSPAC_WORKERS", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


# ==========================================
# 1. Random Streams
# ==========================================


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator; each test gets the same stream."""
    return np.random.default_rng(20240613)


# ==========================================
# 2. Codes
# ==========================================


@pytest.fixture
def memory_cache() -> MemoryBiasCache:
    return MemoryBiasCache()


@pytest.fixture
def pac_8_4() -> PacCodeSpec:
    """PAC(8,4) on the RM(1,3) profile, precoder 13 (octal), flat biases."""
    return PacCodeSpecFactory(n=8, k=4, conv_octal="13")


@pytest.fixture
def pac_64_32_flat() -> PacCodeSpec:
    return PacCodeSpecFactory(n=64, k=32)


@pytest.fixture(scope="session")
def pac_64_32() -> PacCodeSpec:
    """PAC(64,32) with the shipped profile and biases estimated at 5 dB."""
    return build_pac_spec(64, 32, samples=10_000, cache=MemoryBiasCache())


@pytest.fixture(scope="session")
def pac_128_64() -> PacCodeSpec:
    return build_pac_spec(128, 64, samples=10_000, cache=MemoryBiasCache())
