from pydantic import BaseModel, ConfigDict

from src.automaton.models.RuleVector import RuleVector
from src.gf2.models.BitPoly import BitPoly


class SgModel(BaseModel):
    """The SG-equivalent automata with the data needed to audit them."""

    model_config = ConfigDict(frozen=True)

    l1: int
    p2: BitPoly
    charpoly_base: BitPoly  # P(D)
    rules_a: RuleVector
    rules_b: RuleVector
    charpoly_check: bool

    @property
    def length(self) -> int:
        return self.rules_a.n
