from __future__ import annotations

from math import gcd

from pydantic import BaseModel, model_validator

from src.gf2.FieldArithmetic import FieldArithmetic
from src.sequences.models.Lfsr import Lfsr


class ShrinkingGenerator(BaseModel):
    """Control register R1 decimating data register R2."""

    control: Lfsr
    data: Lfsr

    @model_validator(mode="after")
    def _check_registers(self) -> ShrinkingGenerator:
        for name, register in (("control", self.control), ("data", self.data)):
            if register.feedback.degree != register.length:
                raise ValueError(f"{name} register length must equal its feedback degree")
            if not FieldArithmetic.is_primitive(register.feedback):
                raise ValueError(f"{name} feedback {register.feedback} is not primitive")
        if gcd(self.control.length, self.data.length) != 1:
            raise ValueError(
                f"register lengths L1={self.control.length}, L2={self.data.length} "
                "must be coprime"
            )
        return self

    @property
    def l1(self) -> int:
        return self.control.length

    @property
    def l2(self) -> int:
        return self.data.length
