from __future__ import annotations

from pydantic import BaseModel, ConfigDict, model_validator

from src.gf2.models.BitPoly import BitPoly


class FieldContext(BaseModel):
    """GF(2^m) as GF(2)[D] modulo a primitive polynomial; α is the residue D."""

    model_config = ConfigDict(frozen=True)

    modulus: BitPoly

    @model_validator(mode="after")
    def _check_primitive(self) -> FieldContext:
        # Imported lazily: FieldArithmetic depends on this model.
        from src.gf2.FieldArithmetic import FieldArithmetic

        if not FieldArithmetic.is_primitive(self.modulus):
            raise ValueError(f"field modulus {self.modulus} is not primitive")
        return self

    @property
    def m(self) -> int:
        degree = self.modulus.degree
        assert degree is not None
        return degree

    @property
    def group_order(self) -> int:
        return (1 << self.m) - 1
