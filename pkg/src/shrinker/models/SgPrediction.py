from __future__ import annotations

from pydantic import BaseModel, ConfigDict, model_validator

from src.gf2.models.BitPoly import BitPoly


class SgPrediction(BaseModel):
    """Closed-form properties of a shrunken sequence."""

    model_config = ConfigDict(frozen=True)

    l1: int
    l2: int
    period: int
    ones: int  # per period
    lc_lower: int  # strict: LC > lc_lower
    lc_upper: int
    charpoly_base: BitPoly
    exponent_range: tuple[int, int]  # (low, high]: low < N <= high

    @model_validator(mode="after")
    def _check_formulas(self) -> SgPrediction:
        if self.period != ((1 << self.l2) - 1) << (self.l1 - 1):
            raise ValueError("period disagrees with (2^L2 - 1) * 2^(L1 - 1)")
        if not self.lc_lower < self.lc_upper:
            raise ValueError("empty linear complexity interval")
        return self
