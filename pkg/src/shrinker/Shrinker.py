import logging
from math import gcd

from src.gf2.FieldArithmetic import FieldArithmetic
from src.gf2.models.BitPoly import BitPoly
from src.modeler.SgModeler import SgModeler
from src.sequences.LfsrSimulator import LfsrSimulator
from src.sequences.models.BitSeq import BitSeq
from src.shrinker.models.SgPrediction import SgPrediction
from src.shrinker.models.ShrinkingGenerator import ShrinkingGenerator
from src.WorkbenchErrors import (
    InsufficientDataError,
    InvalidArgumentError,
    StalledGeneratorError,
)

logger = logging.getLogger(__name__)


class Shrinker:
    """The shrinking generator and the closed forms describing its output."""

    @staticmethod
    def shrink_streams(a: BitSeq, b: BitSeq) -> BitSeq:
        """Keep b_i exactly where a_i = 1."""
        if len(a) != len(b):
            raise InvalidArgumentError(
                f"control and data streams differ in length ({len(a)} vs {len(b)})"
            )
        return BitSeq(bits=tuple(bi for ai, bi in zip(a.bits, b.bits) if ai))

    @staticmethod
    def sg_generate(sg: ShrinkingGenerator, n: int) -> BitSeq:
        """First ``n`` shrunken bits; both registers advance in lock-step."""
        if n < 0:
            raise InvalidArgumentError(f"bit count must be non-negative, got {n}")
        if n > 0 and not any(sg.control.state):
            raise StalledGeneratorError("control register seeded with zeros never selects a bit")

        out: list[int] = []
        while len(out) < n:
            # one clock yields at most one bit, so this never overshoots n
            chunk = n - len(out)
            for ai, bi in zip(
                LfsrSimulator.generate(sg.control, chunk).bits,
                LfsrSimulator.generate(sg.data, chunk).bits,
            ):
                if ai:
                    out.append(bi)
        return BitSeq(bits=tuple(out[:n]))

    @staticmethod
    def sg_predict(l1: int, l2: int, p2: BitPoly) -> SgPrediction:
        """Period, ones count and linear complexity bounds, and P(D) with the range of N."""
        if l1 < 2:
            raise InvalidArgumentError(f"L1 must be at least 2 for the LC bounds, got {l1}")
        if gcd(l1, l2) != 1:
            raise InvalidArgumentError(f"gcd(L1={l1}, L2={l2}) must be 1")
        if p2.degree != l2:
            raise InvalidArgumentError(f"P2 = {p2} does not have degree L2 = {l2}")
        if not FieldArithmetic.is_primitive(p2):
            raise InvalidArgumentError(f"P2 = {p2} is not primitive")

        half = 1 << (l1 - 1)
        return SgPrediction(
            l1=l1,
            l2=l2,
            period=((1 << l2) - 1) * half,
            ones=(1 << (l2 - 1)) * half,
            lc_lower=l2 * (half >> 1),
            lc_upper=l2 * half,
            charpoly_base=SgModeler.coset_polynomial(p2, l1),
            exponent_range=(half >> 1, half),
        )

    @staticmethod
    def verify_annihilator(s: BitSeq, p: BitPoly, l1: int) -> bool:
        """True iff P(E)^(2^(L1-1)) annihilates every window of ``s``."""
        if l1 < 1:
            raise InvalidArgumentError(f"L1 must be at least 1, got {l1}")
        if p.degree is None:
            raise InvalidArgumentError("annihilator must be nonzero")
        q = (p ** (1 << (l1 - 1))).bits
        span = q.bit_length() - 1
        if len(s) < span + 1:
            raise InsufficientDataError(
                f"need at least {span + 1} bits to apply a degree-{span} recurrence, got {len(s)}"
            )
        packed = 0
        for i, bit in enumerate(s.bits):
            if bit:
                packed |= 1 << i
        return all(
            ((packed >> i) & q).bit_count() & 1 == 0 for i in range(len(s) - span)
        )
