from __future__ import annotations

from pydantic import BaseModel, model_validator

from src.gf2.models.BitPoly import BitPoly
from src.gf2.PolyArithmetic import PolyArithmetic


class Lfsr(BaseModel):
    """Fibonacci LFSR.

    ``state`` is listed as printed: the last stage is emitted first and the
    feedback bit enters at the front. With feedback 1 + c_1 D + ... + c_L D^L the
    output obeys s_t = Σ c_i s_{t-i}.
    """

    feedback: BitPoly
    state: list[int]

    @model_validator(mode="after")
    def _check_shape(self) -> Lfsr:
        degree = self.feedback.degree
        if degree is None or self.feedback.coefficient(0) != 1:
            raise ValueError(f"feedback polynomial {self.feedback} must have constant term 1")
        if degree > len(self.state):
            raise ValueError(
                f"feedback degree {degree} exceeds register length {len(self.state)}"
            )
        if any(b not in (0, 1) for b in self.state):
            raise ValueError("register stages must hold 0 or 1")
        return self

    @property
    def length(self) -> int:
        return len(self.state)

    @property
    def characteristic_polynomial(self) -> BitPoly:
        """Recurrence polynomial D^L · feedback(1/D) of the output sequence."""
        return BitPoly(bits=PolyArithmetic.reverse(self.feedback.bits, self.length))
