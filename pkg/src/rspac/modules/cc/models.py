"""
Rate-1/2 feed-forward convolutional code parameters.
"""

from pydantic import BaseModel, ConfigDict, Field, field_validator

CONSTRAINT_LENGTH = 7


class CcSpec(BaseModel):
    """
    Two generator tap vectors g[j] = coefficient of x^j, constraint length 7.

    The code has 2^6 = 64 trellis states.
    """

    model_config = ConfigDict(frozen=True)

    g1: tuple[int, ...] = Field(..., description="Taps of the first output")
    g2: tuple[int, ...] = Field(..., description="Taps of the second output")

    @field_validator("g1", "g2")
    @classmethod
    def _check_taps(cls, taps: tuple[int, ...]) -> tuple[int, ...]:
        if len(taps) != CONSTRAINT_LENGTH:
            raise ValueError(f"generator must have {CONSTRAINT_LENGTH} taps, got {len(taps)}")
        if any(t not in (0, 1) for t in taps):
            raise ValueError("taps must be bits")
        if taps[0] != 1 or taps[-1] != 1:
            raise ValueError("taps 0 and 6 must be set")
        return taps

    @property
    def memory(self) -> int:
        return CONSTRAINT_LENGTH - 1

    @property
    def state_count(self) -> int:
        return 1 << self.memory

    @property
    def masks(self) -> tuple[int, int]:
        """Generators as bit masks, bit j = tap on input delayed by j."""
        return (
            sum(t << j for j, t in enumerate(self.g1)),
            sum(t << j for j, t in enumerate(self.g2)),
        )


# g1(x) = 1 + x + x^3 + x^4 + x^6, g2(x) = 1 + x^3 + x^4 + x^5 + x^6
NASA_CC = CcSpec(g1=(1, 1, 0, 1, 1, 0, 1), g2=(1, 0, 0, 1, 1, 1, 1))
