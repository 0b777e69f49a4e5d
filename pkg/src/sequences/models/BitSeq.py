from __future__ import annotations

from collections.abc import Iterable, Iterator

from pydantic import BaseModel, ConfigDict, field_validator


class BitSeq(BaseModel):
    """Finite binary sequence; index 0 is earliest in time."""

    model_config = ConfigDict(frozen=True)

    bits: tuple[int, ...] = ()

    @field_validator("bits")
    @classmethod
    def _binary(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(b not in (0, 1) for b in value):
            raise ValueError("sequence entries must be 0 or 1")
        return value

    @classmethod
    def of(cls, bits: Iterable[int]) -> BitSeq:
        return cls(bits=tuple(bits))

    @classmethod
    def parse(cls, text: str) -> BitSeq:
        """Parse an ASCII 0/1 string (separators ``,`` and spaces ignored)."""
        cleaned = text.replace(",", "").replace(" ", "").strip()
        if any(ch not in "01" for ch in cleaned):
            raise ValueError(f"malformed bit string: {text!r}")
        return cls(bits=tuple(int(ch) for ch in cleaned))

    @property
    def length(self) -> int:
        return len(self.bits)

    def weight(self) -> int:
        return sum(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:  # type: ignore[override]
        return iter(self.bits)

    def __getitem__(self, index: int) -> int:
        return self.bits[index]

    def slice(self, start: int, stop: int | None = None) -> BitSeq:
        return BitSeq(bits=self.bits[start:stop])

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)
