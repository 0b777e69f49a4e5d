from __future__ import annotations

from pydantic import BaseModel, ConfigDict, field_validator

_CODE = {"0": 90, "1": 150}


class RuleVector(BaseModel):
    """Rules of a null-boundary hybrid 90/150 CA, cell 1 first."""

    model_config = ConfigDict(frozen=True)

    rules: tuple[int, ...]

    @field_validator("rules")
    @classmethod
    def _only_90_150(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if not value:
            raise ValueError("rule vector must contain at least one cell")
        bad = [r for r in value if r not in (90, 150)]
        if bad:
            raise ValueError(f"unsupported rules {sorted(set(bad))}; only 90 and 150")
        return value

    @classmethod
    def parse(cls, text: str) -> RuleVector:
        """Parse the ``0`` = rule 90 / ``1`` = rule 150 codification."""
        token = text.strip()
        if not token or any(ch not in _CODE for ch in token):
            raise ValueError(f"malformed rule string: {text!r}")
        return cls(rules=tuple(_CODE[ch] for ch in token))

    @classmethod
    def from_diagonal(cls, diagonal: list[int] | tuple[int, ...]) -> RuleVector:
        return cls(rules=tuple(150 if d else 90 for d in diagonal))

    @property
    def n(self) -> int:
        return len(self.rules)

    @property
    def diagonal(self) -> tuple[int, ...]:
        """d_i = 1 for rule 150, 0 for rule 90."""
        return tuple(1 if r == 150 else 0 for r in self.rules)

    @property
    def mask(self) -> int:
        """Packed diagonal: bit i-1 set when cell i runs rule 150."""
        bits = 0
        for i, r in enumerate(self.rules):
            if r == 150:
                bits |= 1 << i
        return bits

    def reversed(self) -> RuleVector:
        return RuleVector(rules=self.rules[::-1])

    def text(self) -> str:
        return "".join("1" if r == 150 else "0" for r in self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __str__(self) -> str:
        return self.text()
