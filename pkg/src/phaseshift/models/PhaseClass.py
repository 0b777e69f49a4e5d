from pydantic import BaseModel, ConfigDict


class PhaseMember(BaseModel):
    model_config = ConfigDict(frozen=True)

    cell: int
    shift: int  # x_cell(t) = x_reference(t + shift)


class PhaseClass(BaseModel):
    """Cells generating the same sequence up to a shift, reference first."""

    model_config = ConfigDict(frozen=True)

    reference: int
    members: list[PhaseMember]

    @property
    def cells(self) -> list[int]:
        return [m.cell for m in self.members]
