from pydantic import BaseModel, ConfigDict, model_validator

from src.gf2.models.BitPoly import BitPoly
from src.phaseshift.models.PhaseClass import PhaseClass


class PhaseReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    rules: str
    charpoly: BitPoly
    classes: list[PhaseClass]
    unmatched: list[int]
    period: int | None  # order of S modulo the characteristic polynomial

    @model_validator(mode="after")
    def _partition(self) -> "PhaseReport":
        seen = sorted(c for cls in self.classes for c in cls.cells)
        if seen != list(range(1, len(self.rules) + 1)):
            raise ValueError("phase classes must cover every cell exactly once")
        return self

    @property
    def shifts(self) -> dict[int, tuple[int, int]]:
        """cell -> (reference cell, shift)."""
        return {m.cell: (cls.reference, m.shift) for cls in self.classes for m in cls.members}

    def class_of(self, cell: int) -> PhaseClass:
        for cls in self.classes:
            if cell in cls.cells:
                return cls
        raise KeyError(cell)
