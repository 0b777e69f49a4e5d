from __future__ import annotations

from pydantic import BaseModel, ConfigDict, model_validator

from src.gf2.models.BitPoly import BitPoly
from src.gf2.models.FieldContext import FieldContext
from src.gf2.PolyArithmetic import PolyArithmetic


class FieldElement(BaseModel):
    """Residue of degree < m bound to a FieldContext."""

    model_config = ConfigDict(frozen=True)

    ctx: FieldContext
    residue: BitPoly

    @model_validator(mode="after")
    def _check_reduced(self) -> FieldElement:
        degree = self.residue.degree
        if degree is not None and degree >= self.ctx.m:
            raise ValueError(f"residue {self.residue} not reduced modulo {self.ctx.modulus}")
        return self

    @classmethod
    def alpha_power(cls, ctx: FieldContext, e: int) -> FieldElement:
        """α^e with α the class of D."""
        bits = PolyArithmetic.pow_mod(0b10, e % ctx.group_order, ctx.modulus.bits)
        return cls(ctx=ctx, residue=BitPoly(bits=bits))

    def is_zero(self) -> bool:
        return self.residue.bits == 0

    def __add__(self, other: FieldElement) -> FieldElement:
        return FieldElement(ctx=self.ctx, residue=self.residue + other.residue)

    def __mul__(self, other: FieldElement) -> FieldElement:
        bits = PolyArithmetic.mul_mod(
            self.residue.bits, other.residue.bits, self.ctx.modulus.bits
        )
        return FieldElement(ctx=self.ctx, residue=BitPoly(bits=bits))

    def __pow__(self, e: int) -> FieldElement:
        bits = PolyArithmetic.pow_mod(self.residue.bits, e, self.ctx.modulus.bits)
        return FieldElement(ctx=self.ctx, residue=BitPoly(bits=bits))
