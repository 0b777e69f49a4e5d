import logging

from src.automaton.CellularAutomaton import CellularAutomaton
from src.automaton.models.CaState import CaState
from src.automaton.models.RuleVector import RuleVector
from src.sequences.models.BitSeq import BitSeq
from src.WorkbenchErrors import (
    InvalidArgumentError,
    VerificationMismatchError,
    WindowTooShortError,
)

logger = logging.getLogger(__name__)


class StateRecovery:
    """Invert the rightmost-cell trace of a 90/150 CA back to its initial state."""

    @staticmethod
    def _columns(rv: RuleVector, window: BitSeq) -> list[int]:
        """Packed cell columns; entry j holds x_j(t) at bit t for t < j (index 0 unused)."""
        n = rv.n
        if len(window) != n:
            raise InvalidArgumentError(f"window has {len(window)} bits, automaton has {n} cells")
        d = rv.diagonal
        columns = [0] * (n + 2)
        for t, bit in enumerate(window.bits):
            columns[n] |= bit << t
        # cell j+1: x_{j+1}(t+1) = x_j(t) + d_{j+1}·x_{j+1}(t) + x_{j+2}(t)
        for j in range(n - 1, 0, -1):
            upper = columns[j + 1]
            derived = (upper >> 1) ^ (upper if d[j] else 0) ^ columns[j + 2]
            columns[j] = derived & ((1 << j) - 1)
        return columns

    @staticmethod
    def recover_triangle(rv: RuleVector, window: BitSeq) -> list[list[int]]:
        """Rows t = 0 .. n-1 of the reconstruction triangle; row t covers cells t+1 .. n."""
        columns = StateRecovery._columns(rv, window)
        n = rv.n
        return [[(columns[j] >> t) & 1 for j in range(t + 1, n + 1)] for t in range(n)]

    @staticmethod
    def recover_state(rv: RuleVector, window: BitSeq) -> CaState:
        """The unique state whose cell-n trace over n steps equals ``window``."""
        columns = StateRecovery._columns(rv, window)
        return CaState(cells=tuple(columns[j] & 1 for j in range(1, rv.n + 1)))

    @staticmethod
    def recover_keystream(rv: RuleVector, window: BitSeq, horizon: int) -> BitSeq:
        """Recover from the first n bits, check the rest, emit ``horizon`` bits of cell n."""
        n = rv.n
        if len(window) < n:
            raise WindowTooShortError(f"window of {len(window)} bits is shorter than n = {n}")
        if horizon < 0:
            raise InvalidArgumentError(f"horizon must be non-negative, got {horizon}")
        state = StateRecovery.recover_state(rv, window.slice(0, n))
        total = max(horizon, len(window))
        stream = CellularAutomaton.cell_trace(rv, state, n, total)
        if stream.bits[: len(window)] != window.bits:
            first_bad = next(
                t for t, (a, b) in enumerate(zip(stream.bits, window.bits)) if a != b
            )
            raise VerificationMismatchError(
                f"regenerated bit {first_bad} disagrees with the window for CA {rv}"
            )
        logger.debug(f"state {state} verified against {len(window) - n} extra bits")
        return stream.slice(0, horizon)
