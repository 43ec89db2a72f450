"""
Infrastructure interfaces for rspac.

Domain code receives a cache through these protocols and never touches the
filesystem-backed implementation directly.
"""

from typing import Optional, Protocol

from pydantic import BaseModel, ConfigDict, Field


class BiasKey(BaseModel):
    """
    Identifies one bias estimate.

    K is part of the key because the design Eb/N0 is normalized by K/N.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Code length N")
    k: int = Field(..., ge=0, description="Data length K")
    design_snr_db: float = Field(..., description="Design Eb/N0 in dB")
    samples: int = Field(..., ge=1, description="Monte-Carlo sample count")
    seed: int = Field(..., ge=0, description="Estimation seed")

    def header(self) -> str:
        return (
            f"# rspac-biases n={self.n} k={self.k} design_snr_db={self.design_snr_db!r} "
            f"samples={self.samples} seed={self.seed}"
        )


class BiasCache(Protocol):
    """
    Storage for per-bit-channel bias vectors.

    Implementations:
    - FileBiasCache (one text file per key)
    - MemoryBiasCache (testing)
    """

    def get(self, key: BiasKey) -> Optional[list[float]]:
        """Cached biases, or None on a miss."""
        ...

    def set(self, key: BiasKey, biases: list[float]) -> None:
        ...

    def exists(self, key: BiasKey) -> bool:
        ...

    def delete(self, key: BiasKey) -> bool:
        """Returns True if an entry was removed."""
        ...
