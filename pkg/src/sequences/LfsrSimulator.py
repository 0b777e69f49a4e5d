import logging

from src.gf2.models.BitPoly import BitPoly
from src.sequences.models.BitSeq import BitSeq
from src.sequences.models.Lfsr import Lfsr
from src.WorkbenchErrors import InvalidArgumentError

logger = logging.getLogger(__name__)


class LfsrSimulator:
    """Clocking of Fibonacci LFSRs."""

    @staticmethod
    def taps(lfsr: Lfsr) -> list[int]:
        """Stage indices (0-based, as listed) summed into the feedback bit."""
        feedback = lfsr.feedback.bits
        return [k - 1 for k in range(1, lfsr.length + 1) if (feedback >> k) & 1]

    @staticmethod
    def generate(lfsr: Lfsr, n: int) -> BitSeq:
        """Emit ``n`` bits, advancing ``lfsr.state`` in place."""
        if n < 0:
            raise InvalidArgumentError(f"bit count must be non-negative, got {n}")
        if lfsr.length == 0:
            return BitSeq(bits=(0,) * n)
        taps = LfsrSimulator.taps(lfsr)
        state = list(lfsr.state)
        out = []
        for _ in range(n):
            out.append(state[-1])
            fb = 0
            for k in taps:
                fb ^= state[k]
            state.insert(0, fb)
            state.pop()
        lfsr.state = state
        return BitSeq(bits=tuple(out))

    @staticmethod
    def from_output_prefix(feedback: BitPoly, prefix: BitSeq, length: int | None = None) -> Lfsr:
        """Register whose first ``length`` outputs are ``prefix``."""
        size = len(prefix) if length is None else length
        if len(prefix) < size:
            raise InvalidArgumentError(f"prefix of {len(prefix)} bits cannot seed {size} stages")
        return Lfsr(feedback=feedback, state=list(reversed(prefix.bits[:size])))
