from pydantic import BaseModel, ConfigDict

from src.gf2.models.BitPoly import BitPoly


class TransferPolynomial(BaseModel):
    """X_cell = pi(S)·X_reference, S being the one-step shift of a cell sequence."""

    model_config = ConfigDict(frozen=True)

    pi: BitPoly
    cell: int
    reference: int

    def __str__(self) -> str:
        return f"X_{self.cell} = ({self.pi.format('S')})·X_{self.reference}"
