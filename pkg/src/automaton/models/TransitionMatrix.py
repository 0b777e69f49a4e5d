from __future__ import annotations

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, field_validator


class TransitionMatrix(BaseModel):
    """Tridiagonal GF(2) matrix A with next = state · A."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: npt.NDArray[np.uint8]

    @field_validator("matrix")
    @classmethod
    def _tridiagonal(cls, value: npt.NDArray[np.uint8]) -> npt.NDArray[np.uint8]:
        n = value.shape[0]
        if value.ndim != 2 or value.shape != (n, n):
            raise ValueError(f"transition matrix must be square, got shape {value.shape}")
        if not np.array_equal(value, value.T):
            raise ValueError("transition matrix must be symmetric")
        band = np.abs(np.subtract.outer(np.arange(n), np.arange(n))) <= 1
        if value[~band].any():
            raise ValueError("transition matrix must be tridiagonal")
        if n > 1 and not (np.diagonal(value, 1) == 1).all():
            raise ValueError("off-diagonal neighbours must all be coupled")
        value.setflags(write=False)
        return value

    @property
    def n(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(int(d) for d in np.diagonal(self.matrix))

    def apply(self, cells: npt.NDArray[np.uint8]) -> npt.NDArray[np.uint8]:
        """Row vector times A over GF(2)."""
        return ((cells.astype(np.int64) @ self.matrix.astype(np.int64)) & 1).astype(np.uint8)
