from __future__ import annotations

from pydantic import BaseModel, ConfigDict, field_validator


class CaState(BaseModel):
    """Contents x_1 .. x_n of the cells, left to right."""

    model_config = ConfigDict(frozen=True)

    cells: tuple[int, ...]

    @field_validator("cells")
    @classmethod
    def _binary(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(b not in (0, 1) for b in value):
            raise ValueError("cell contents must be 0 or 1")
        return value

    @classmethod
    def parse(cls, text: str) -> CaState:
        token = text.strip()
        if any(ch not in "01" for ch in token):
            raise ValueError(f"malformed state string: {text!r}")
        return cls(cells=tuple(int(ch) for ch in token))

    @classmethod
    def zeros(cls, n: int) -> CaState:
        return cls(cells=(0,) * n)

    @classmethod
    def from_packed(cls, packed: int, n: int) -> CaState:
        return cls(cells=tuple((packed >> i) & 1 for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.cells)

    @property
    def packed(self) -> int:
        """Bit i-1 holds x_i."""
        bits = 0
        for i, c in enumerate(self.cells):
            if c:
                bits |= 1 << i
        return bits

    def is_zero(self) -> bool:
        return not any(self.cells)

    def __str__(self) -> str:
        return "".join(str(c) for c in self.cells)
