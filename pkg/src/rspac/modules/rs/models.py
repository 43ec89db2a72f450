"""
Reed-Solomon code parameters and decode outcomes.
"""

from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from rspac.modules.field import GROUP_ORDER


class RsCodeSpec(BaseModel):
    """
    (n, k, d_min) Reed-Solomon code over GF(2^8), possibly shortened.

    A shortened code is the (n + shorten_by, k + shorten_by) mother code with
    its top shorten_by message symbols fixed to zero and not transmitted.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., gt=0, description="Block length in symbols")
    k: int = Field(..., gt=0, description="Message length in symbols")
    t: int = Field(..., ge=1, le=127, description="Symbol-error correction capability")
    d_min: int = Field(..., description="Minimum distance")
    shorten_by: int = Field(default=0, ge=0, description="Virtual zero symbols removed")

    @model_validator(mode="after")
    def _check_mds(self) -> "RsCodeSpec":
        if self.k >= self.n:
            raise ValueError(f"k={self.k} must be smaller than n={self.n}")
        if self.d_min != self.n - self.k + 1:
            raise ValueError(f"d_min={self.d_min} violates d_min = n - k + 1")
        if self.t != (self.d_min - 1) // 2 or self.n - self.k != 2 * self.t:
            raise ValueError(f"t={self.t} inconsistent with n - k = {self.n - self.k}")
        if self.n + self.shorten_by > GROUP_ORDER:
            raise ValueError(
                f"mother length n + shorten_by = {self.n + self.shorten_by} exceeds 255"
            )
        return self

    @classmethod
    def create(cls, n: int, k: int, shorten_by: int = 0) -> "RsCodeSpec":
        """Build a spec from (n, k), deriving t and d_min."""
        d_min = n - k + 1
        return cls(n=n, k=k, t=(d_min - 1) // 2, d_min=d_min, shorten_by=shorten_by)

    @property
    def parity_len(self) -> int:
        return 2 * self.t

    def mother(self) -> "RsCodeSpec":
        """The unshortened code this spec derives from."""
        if self.shorten_by == 0:
            return self
        return RsCodeSpec.create(self.n + self.shorten_by, self.k + self.shorten_by)


RS_255_223 = RsCodeSpec.create(255, 223)
RS_252_220 = RsCodeSpec.create(252, 220, shorten_by=3)
RS_240_208 = RsCodeSpec.create(240, 208, shorten_by=15)


class RsCorrected(BaseModel):
    """Decoder found a codeword within distance t (or a consistent miscorrection)."""

    model_config = ConfigDict(frozen=True)

    status: Literal["corrected"] = "corrected"
    codeword: tuple[int, ...] = Field(..., description="Corrected codeword, coefficient order")
    error_count: int = Field(..., ge=0, description="Number of symbols changed")

    @property
    def word(self) -> tuple[int, ...]:
        return self.codeword


class RsFailure(BaseModel):
    """Decoder declared a decoding failure; the received word is passed through."""

    model_config = ConfigDict(frozen=True)

    status: Literal["failure"] = "failure"
    received: tuple[int, ...] = Field(..., description="Received word, coefficient order")

    @property
    def word(self) -> tuple[int, ...]:
        return self.received


RsDecodeOutcome = Annotated[Union[RsCorrected, RsFailure], Field(discriminator="status")]
