import logging

from src.gf2.models.BitPoly import BitPoly
from src.gf2.models.FieldContext import FieldContext
from src.gf2.models.FieldElement import FieldElement
from src.gf2.PolyArithmetic import PolyArithmetic
from src.gf2.PrimeFactorTable import PrimeFactorTable
from src.WorkbenchErrors import InvalidArgumentError, SynthesisError

logger = logging.getLogger(__name__)

_D = 0b10


class FieldArithmetic:
    """Modular arithmetic, irreducibility/primitivity tests and minimal polynomials."""

    @staticmethod
    def poly_mul_mod(a: BitPoly, b: BitPoly, m: BitPoly) -> BitPoly:
        """(a·b) mod m."""
        if m.is_zero():
            raise InvalidArgumentError("poly_mul_mod: zero modulus")
        return BitPoly(bits=PolyArithmetic.mul_mod(a.bits, b.bits, m.bits))

    @staticmethod
    def poly_pow_mod(a: BitPoly, e: int, m: BitPoly) -> BitPoly:
        """a^e mod m by square-and-multiply."""
        if m.is_zero():
            raise InvalidArgumentError("poly_pow_mod: zero modulus")
        if e < 0:
            raise InvalidArgumentError(f"poly_pow_mod: negative exponent {e}")
        return BitPoly(bits=PolyArithmetic.pow_mod(a.bits, e, m.bits))

    @staticmethod
    def _small_prime_factors(n: int) -> list[int]:
        factors = []
        q = 2
        while q * q <= n:
            if n % q == 0:
                factors.append(q)
                while n % q == 0:
                    n //= q
            q += 1
        if n > 1:
            factors.append(n)
        return factors

    @staticmethod
    def _frobenius(k: int, p: int) -> int:
        """D^(2^k) mod p by k repeated squarings."""
        x = PolyArithmetic.mod(_D, p)
        for _ in range(k):
            x = PolyArithmetic.mod(PolyArithmetic.square(x), p)
        return x

    @staticmethod
    def is_irreducible(p: BitPoly) -> bool:
        """Rabin test: D^(2^n) ≡ D and gcd(D^(2^(n/q)) - D, p) = 1 for primes q | n."""
        n = p.degree
        if n is None or n < 1:
            raise InvalidArgumentError(f"irreducibility undefined for constant polynomial {p}")
        bits = p.bits
        d_mod = PolyArithmetic.mod(_D, bits)
        if FieldArithmetic._frobenius(n, bits) != d_mod:
            return False
        for q in FieldArithmetic._small_prime_factors(n):
            h = FieldArithmetic._frobenius(n // q, bits) ^ d_mod
            if PolyArithmetic.gcd(bits, h) != 1:
                return False
        return True

    @staticmethod
    def multiplicative_order_is_full(p: BitPoly) -> bool:
        """True iff D has order exactly 2^m - 1 modulo p."""
        m = p.degree
        assert m is not None
        group = (1 << m) - 1
        if PolyArithmetic.pow_mod(_D, group, p.bits) != 1:
            return False
        return all(
            PolyArithmetic.pow_mod(_D, group // q, p.bits) != 1
            for q in PrimeFactorTable.prime_factors(m)
        )

    @staticmethod
    def is_primitive(p: BitPoly) -> bool:
        """Irreducible with D generating the multiplicative group (degree <= 64)."""
        if not FieldArithmetic.is_irreducible(p):
            return False
        if p.coefficient(0) == 0:
            return False
        return FieldArithmetic.multiplicative_order_is_full(p)

    @staticmethod
    def cyclotomic_coset(e: int, m: int) -> list[int]:
        """Orbit {e, 2e, 4e, ...} modulo 2^m - 1, in generation order."""
        group = (1 << m) - 1
        first = e % group
        coset = [first]
        current = (first * 2) % group
        while current != first:
            coset.append(current)
            current = (current * 2) % group
        return coset

    @staticmethod
    def minimal_polynomial_of_power(ctx: FieldContext, e: int) -> BitPoly:
        """Π_{c in coset(e)} (D + α^c), collapsed to GF(2)."""
        if not 1 <= e < (1 << ctx.m):
            raise InvalidArgumentError(f"exponent {e} outside [1, 2^{ctx.m})")
        coset = FieldArithmetic.cyclotomic_coset(e, ctx.m)
        modulus = ctx.modulus.bits

        # coefficients in GF(2^m), index = degree
        product = [1]
        for c in coset:
            root = FieldElement.alpha_power(ctx, c).residue.bits
            shifted = [0, *product]
            for k, coeff in enumerate(product):
                shifted[k] ^= PolyArithmetic.mul_mod(root, coeff, modulus)
            product = shifted

        bits = 0
        for k, coeff in enumerate(product):
            if coeff not in (0, 1):
                raise SynthesisError(
                    f"coset product coefficient of D^{k} left GF(2): {PolyArithmetic.format(coeff)}"
                )
            bits |= coeff << k
        logger.debug(f"minimal polynomial of alpha^{e} in GF(2^{ctx.m}): coset size {len(coset)}")
        return BitPoly(bits=bits)
