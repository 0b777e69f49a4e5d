import logging

from src.automaton.models.RuleVector import RuleVector
from src.gf2.FieldArithmetic import FieldArithmetic
from src.gf2.LinearSolver import LinearSolver
from src.gf2.models.BitPoly import BitPoly
from src.gf2.PolyArithmetic import PolyArithmetic
from src.WorkbenchErrors import InvalidArgumentError, SynthesisError

logger = logging.getLogger(__name__)


class CaSynthesizer:
    """Characteristic polynomials of 90/150 CA and their inverse, CA synthesis.

    For a rule vector with diagonal d_1..d_n the continuants
    Δ_0 = 1, Δ_1 = x + d_1, Δ_k = (x + d_k)·Δ_{k-1} + Δ_{k-2}
    give the characteristic polynomial Δ_n. Synthesis runs this recurrence
    backwards: Euclid on (P, Δ_{n-1}) yields the quotients x + d_k.
    """

    @staticmethod
    def continuants(diagonal: tuple[int, ...] | list[int]) -> list[int]:
        """Packed Δ_0 .. Δ_n."""
        deltas = [1]
        prev, cur = 0, 1
        for d in diagonal:
            prev, cur = cur, (cur << 1) ^ (cur if d else 0) ^ prev
            deltas.append(cur)
        return deltas

    @staticmethod
    def ca_charpoly(rv: RuleVector) -> BitPoly:
        return BitPoly(bits=CaSynthesizer.continuants(rv.diagonal)[-1])

    @staticmethod
    def _diagonal_from_continuant(p: int, b: int, n: int) -> list[int] | None:
        """Read d_1..d_n off the continued fraction of p/b; None unless all quotients are linear."""
        diagonal: list[int] = []
        r0, r1 = p, b
        while r1:
            q, r = PolyArithmetic.divmod(r0, r1)
            if q not in (0b10, 0b11):
                return None
            diagonal.append(q & 1)
            r0, r1 = r1, r
        if r0 != 1 or len(diagonal) != n:
            return None
        diagonal.reverse()
        return diagonal

    @staticmethod
    def _quadratic_roots(p: int, n: int) -> list[int]:
        """Roots of y^2 + c·y + 1 modulo p, with c = (x^2 + x)·p'(x).

        The substitution y = c·z turns it into z^2 + z = 1/c^2, a GF(2)-linear
        system in the coordinates of z.
        """
        c = PolyArithmetic.mul_mod(0b110, PolyArithmetic.derivative(p), p)
        c_inv = PolyArithmetic.inverse_mod(c, p)
        if c_inv is None:
            return []
        target = PolyArithmetic.mod(PolyArithmetic.square(c_inv), p)
        columns = [
            PolyArithmetic.mod(1 << (2 * j), p) ^ (1 << j) for j in range(n)
        ]
        z = LinearSolver.solve(columns, target)
        if z is None:
            return []
        y = PolyArithmetic.mul_mod(c, z, p)
        return [y, y ^ c]

    @staticmethod
    def synthesize_ca(p: BitPoly) -> tuple[RuleVector, RuleVector]:
        """The two mirror-image 90/150 CA whose characteristic polynomial is ``p``."""
        n = p.degree
        if n is None or n < 1:
            raise InvalidArgumentError(f"cannot synthesize a CA for constant polynomial {p}")
        if not FieldArithmetic.is_irreducible(p):
            raise InvalidArgumentError(f"synthesis requires an irreducible polynomial, got {p}")

        diagonal: list[int] | None = None
        if n == 1:
            diagonal = [p.coefficient(0)]
        else:
            for root in CaSynthesizer._quadratic_roots(p.bits, n):
                if PolyArithmetic.degree(root) != n - 1:
                    continue
                diagonal = CaSynthesizer._diagonal_from_continuant(p.bits, root, n)
                if diagonal is not None:
                    break
        if diagonal is None:
            raise SynthesisError(f"no 90/150 rule vector found for {p}")

        rv = RuleVector.from_diagonal(diagonal)
        pair = sorted((rv, rv.reversed()), key=lambda r: r.text())
        for candidate in pair:
            if CaSynthesizer.ca_charpoly(candidate) != p:
                raise SynthesisError(
                    f"synthesized {candidate} has characteristic polynomial "
                    f"{CaSynthesizer.ca_charpoly(candidate)}, expected {p}"
                )
        logger.debug(f"synthesized {pair[0]} / {pair[1]} for {p}")
        return pair[0], pair[1]
