from pydantic import BaseModel, ConfigDict, Field


class AttackReport(BaseModel):
    """Outcome of a CA-model keystream reconstruction."""

    model_config = ConfigDict(frozen=True)

    ca_used: str  # rule string of the candidate, as synthesized
    candidate: str  # "a" or "b"
    orientation: str  # "right": keystream in cell n; "left": keystream in cell 1
    state: str  # recovered initial state, cell 1 first
    bits_required: int
    linear_complexity: int
    bm_equivalent: int
    degenerate: bool
    keystream: str
    charpoly_base: str
    notes: list[str] = Field(default_factory=list)
