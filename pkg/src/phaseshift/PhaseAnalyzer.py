import logging
from functools import lru_cache

from src.automaton.models.RuleVector import RuleVector
from src.gf2.models.BitPoly import BitPoly
from src.gf2.PolyArithmetic import PolyArithmetic
from src.modeler.CaSynthesizer import CaSynthesizer
from src.models.WorkbenchConfig import WorkbenchConfig
from src.phaseshift.models.PhaseClass import PhaseClass, PhaseMember
from src.phaseshift.models.PhaseReport import PhaseReport
from src.phaseshift.models.TransferPolynomial import TransferPolynomial
from src.WorkbenchErrors import (
    InvalidArgumentError,
    VerificationMismatchError,
    ZeroOperatorError,
)

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def _orbit(start: int, modulus: int, limit: int) -> tuple[dict[int, int], bool]:
    """Residues S^e·start mod ``modulus`` keyed to their least e.

    The flag tells whether the orbit closed on ``start``.
    """
    m = PolyArithmetic.degree(modulus)
    top = 1 << m
    table: dict[int, int] = {}
    x = start
    while x and x not in table:
        if len(table) >= limit:
            raise InvalidArgumentError(
                f"orbit of S modulo {PolyArithmetic.format(modulus)} "
                f"exceeds the log table limit {limit}"
            )
        table[x] = len(table)
        x <<= 1
        if x & top:
            x ^= modulus
    return table, x == start and x != 0


class PhaseAnalyzer:
    """Relative phaseshifts between the cells of a 90/150 CA.

    Every cell sequence is an operator polynomial in the shift S applied to the
    sequence of cell n. Two cells carry the same sequence, shifted by e steps,
    exactly when their operators differ by a factor S^e modulo the
    characteristic polynomial M.
    """

    @staticmethod
    def transfer_polynomials(rv: RuleVector) -> list[TransferPolynomial]:
        """π_1 .. π_n relative to cell n, listed cell 1 first."""
        n = rv.n
        # π_{n-k} is the continuant of the bottom k×k block: d_n, d_{n-1}, ...
        deltas = CaSynthesizer.continuants(rv.diagonal[::-1])
        charpoly = CaSynthesizer.ca_charpoly(rv)
        if deltas[n] != charpoly.bits:
            raise VerificationMismatchError(
                f"closing identity fails for {rv}: {PolyArithmetic.format(deltas[n], 'S')} "
                f"vs {charpoly.format('S')}"
            )
        return [
            TransferPolynomial(pi=BitPoly(bits=deltas[n - cell]), cell=cell, reference=n)
            for cell in range(1, n + 1)
        ]

    @staticmethod
    def shift_log(
        pi: BitPoly, modulus: BitPoly, config: WorkbenchConfig | None = None
    ) -> int | None:
        """Least e >= 0 with S^e ≡ pi (mod M), or None when pi is not a power of S."""
        if config is None:
            config = WorkbenchConfig()
        if modulus.degree is None or modulus.degree < 1:
            raise InvalidArgumentError(f"modulus {modulus} must have positive degree")
        residue = PolyArithmetic.mod(pi.bits, modulus.bits)
        if residue == 0:
            raise ZeroOperatorError(f"{pi.format('S')} vanishes modulo {modulus.format('S')}")
        start = PolyArithmetic.mod(1, modulus.bits)
        table, _ = _orbit(start, modulus.bits, config.log_table_limit)
        return table.get(residue)

    @staticmethod
    def shift_order(modulus: BitPoly, config: WorkbenchConfig | None = None) -> int | None:
        """Order of S modulo M; None when S is not invertible."""
        if config is None:
            config = WorkbenchConfig()
        start = PolyArithmetic.mod(1, modulus.bits)
        table, closed = _orbit(start, modulus.bits, config.log_table_limit)
        return len(table) if closed else None

    @staticmethod
    def phase_report(rv: RuleVector, config: WorkbenchConfig | None = None) -> PhaseReport:
        if config is None:
            config = WorkbenchConfig()
        n = rv.n
        charpoly = CaSynthesizer.ca_charpoly(rv)
        modulus = charpoly.bits
        residues = {
            tp.cell: PolyArithmetic.mod(tp.pi.bits, modulus)
            for tp in PhaseAnalyzer.transfer_polynomials(rv)
        }

        # cell n (the transfer reference) seeds the first class
        visit = [n] + list(range(1, n))
        assigned: set[int] = set()
        classes: list[PhaseClass] = []
        for reference in visit:
            if reference in assigned:
                continue
            table, _ = _orbit(residues[reference], modulus, config.log_table_limit)
            members = [PhaseMember(cell=reference, shift=0)]
            assigned.add(reference)
            for cell in visit:
                if cell in assigned:
                    continue
                shift = table.get(residues[cell])
                if shift is not None:
                    members.append(PhaseMember(cell=cell, shift=shift))
                    assigned.add(cell)
            classes.append(PhaseClass(reference=reference, members=members))

        unmatched = sorted(cls.reference for cls in classes if len(cls.members) == 1)
        logger.info(f"{rv}: {len(classes)} phase classes, {len(unmatched)} unmatched cells")
        return PhaseReport(
            rules=rv.text(),
            charpoly=charpoly,
            classes=classes,
            unmatched=unmatched,
            period=PhaseAnalyzer.shift_order(charpoly, config),
        )
