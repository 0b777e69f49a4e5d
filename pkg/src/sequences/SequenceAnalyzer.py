import logging

from src.gf2.models.BitPoly import BitPoly
from src.gf2.PolyArithmetic import PolyArithmetic
from src.sequences.models.BitSeq import BitSeq
from src.WorkbenchErrors import InsufficientDataError, InvalidArgumentError

logger = logging.getLogger(__name__)


class SequenceAnalyzer:
    """Period detection and linear-complexity measurement of bit sequences."""

    @staticmethod
    def seq_period(s: BitSeq) -> int | None:
        """Smallest t > 0 with s[i] = s[i+t] over the window.

        Only candidates t <= len/2 are accepted, so that at least two periods are
        witnessed; None means the period is undetermined within the window.
        """
        if len(s) == 0:
            raise InvalidArgumentError("period of an empty sequence is undefined")
        bits = s.bits
        for t in range(1, len(bits) // 2 + 1):
            if bits[t:] == bits[:-t]:
                return t
        logger.warning(f"no period <= {len(bits) // 2} in a window of {len(bits)} bits")
        return None

    @staticmethod
    def berlekamp_massey(s: BitSeq) -> tuple[int, BitPoly]:
        """Linear complexity and connection polynomial C with s_t = Σ_{i>=1} c_i s_{t-i}."""
        lc = 0
        conn = 1  # current connection polynomial
        prev = 1  # connection polynomial before the last length change
        gap = 1  # steps since the last length change
        window = 0  # bit i holds s[n - i]
        for n, bit in enumerate(s.bits):
            window = (window << 1) | bit
            discrepancy = (conn & window).bit_count() & 1
            if discrepancy == 0:
                gap += 1
            elif 2 * lc <= n:
                previous_conn = conn
                conn ^= prev << gap
                lc = n + 1 - lc
                prev = previous_conn
                gap = 1
            else:
                conn ^= prev << gap
                gap += 1
        return lc, BitPoly(bits=conn)

    @staticmethod
    def linear_complexity(s: BitSeq) -> int:
        return SequenceAnalyzer.berlekamp_massey(s)[0]

    @staticmethod
    def minimal_polynomial_of_seq(s: BitSeq) -> BitPoly:
        """Characteristic polynomial of the shortest recurrence annihilating ``s``."""
        lc, conn = SequenceAnalyzer.berlekamp_massey(s)
        if 2 * lc > len(s):
            raise InsufficientDataError(
                f"linear complexity {lc} needs at least {2 * lc} bits, got {len(s)}"
            )
        return BitPoly(bits=PolyArithmetic.reverse(conn.bits, lc))
