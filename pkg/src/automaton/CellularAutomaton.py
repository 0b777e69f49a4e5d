import logging

import numpy as np

from src.automaton.models.CaState import CaState
from src.automaton.models.RuleVector import RuleVector
from src.automaton.models.TransitionMatrix import TransitionMatrix
from src.sequences.models.BitSeq import BitSeq
from src.WorkbenchErrors import InvalidArgumentError

logger = logging.getLogger(__name__)


class CellularAutomaton:
    """Null-boundary 90/150 CA evolution on bit-packed rows.

    A row is an int whose bit i-1 holds cell i; one step is
    ``(row << 1) ^ (row >> 1) ^ (row & mask)`` truncated to n bits.
    """

    @staticmethod
    def step_packed(row: int, mask: int, full: int) -> int:
        return ((row << 1) ^ (row >> 1) ^ (row & mask)) & full

    @staticmethod
    def _check_length(rv: RuleVector, s: CaState) -> None:
        if rv.n != s.n:
            raise InvalidArgumentError(f"state has {s.n} cells, rule vector has {rv.n}")

    @staticmethod
    def ca_step(rv: RuleVector, s: CaState) -> CaState:
        CellularAutomaton._check_length(rv, s)
        full = (1 << rv.n) - 1
        return CaState.from_packed(CellularAutomaton.step_packed(s.packed, rv.mask, full), rv.n)

    @staticmethod
    def run_packed(rv: RuleVector, s: CaState, steps: int) -> list[int]:
        """Packed rows for t = 0 .. steps-1."""
        CellularAutomaton._check_length(rv, s)
        mask, full = rv.mask, (1 << rv.n) - 1
        row = s.packed
        rows = []
        for _ in range(steps):
            rows.append(row)
            row = CellularAutomaton.step_packed(row, mask, full)
        return rows

    @staticmethod
    def run(rv: RuleVector, s: CaState, steps: int) -> list[CaState]:
        return [CaState.from_packed(r, rv.n) for r in CellularAutomaton.run_packed(rv, s, steps)]

    @staticmethod
    def cell_trace(rv: RuleVector, s: CaState, cell: int, n: int) -> BitSeq:
        """Contents of ``cell`` (1-based) at t = 0 .. n-1."""
        if not 1 <= cell <= rv.n:
            raise InvalidArgumentError(f"cell {cell} outside 1..{rv.n}")
        if n < 0:
            raise InvalidArgumentError(f"trace length must be non-negative, got {n}")
        shift = cell - 1
        rows = CellularAutomaton.run_packed(rv, s, n)
        return BitSeq(bits=tuple((row >> shift) & 1 for row in rows))

    @staticmethod
    def all_traces(rv: RuleVector, s: CaState, n: int) -> list[BitSeq]:
        """Traces of every cell, index 0 = cell 1."""
        rows = CellularAutomaton.run_packed(rv, s, n)
        return [
            BitSeq(bits=tuple((row >> i) & 1 for row in rows)) for i in range(rv.n)
        ]

    @staticmethod
    def transition_matrix(rv: RuleVector) -> TransitionMatrix:
        n = rv.n
        matrix = np.zeros((n, n), dtype=np.uint8)
        idx = np.arange(n - 1)
        matrix[idx, idx + 1] = 1
        matrix[idx + 1, idx] = 1
        matrix[np.arange(n), np.arange(n)] = np.array(rv.diagonal, dtype=np.uint8)
        return TransitionMatrix(matrix=matrix)

    @staticmethod
    def matrix_step(a: TransitionMatrix, s: CaState) -> CaState:
        """Row-vector step with the null-boundary matrix: next = s · A."""
        if a.n != s.n:
            raise InvalidArgumentError(f"state has {s.n} cells, matrix has order {a.n}")
        cells = a.apply(np.array(s.cells, dtype=np.uint8))
        return CaState(cells=tuple(int(c) for c in cells))

    @staticmethod
    def symmetric_embedding(s: CaState) -> CaState:
        """State s followed by its mirror image, for the doubled automaton."""
        return CaState(cells=s.cells + s.cells[::-1])
