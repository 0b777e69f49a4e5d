import random

import pytest

from src.gf2.FieldArithmetic import FieldArithmetic
from src.gf2.LinearSolver import LinearSolver
from src.gf2.models.BitPoly import BitPoly
from src.gf2.models.FieldContext import FieldContext
from src.gf2.models.FieldElement import FieldElement
from src.gf2.PolyArithmetic import PolyArithmetic
from src.gf2.PrimeFactorTable import PrimeFactorTable
from src.WorkbenchErrors import InvalidArgumentError, SynthesisError, WorkbenchError

QUINTIC = BitPoly.parse("1+D+D^3+D^4+D^5")


def polys_of_degree(m: int) -> list[BitPoly]:
    return [BitPoly(bits=(1 << m) | (mid << 1) | 1) for mid in range(1 << (m - 1))]


def schoolbook_mul_mod(a: list[int], b: list[int], m: list[int]) -> list[int]:
    """Coefficient-list multiply, then long division by m; the remainder is trimmed."""
    product = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            product[i + j] ^= x & y
    top = len(m) - 1
    for k in range(len(product) - 1, top - 1, -1):
        if product[k]:
            for j, c in enumerate(m):
                product[k - top + j] ^= c
    remainder = product[:top]
    while remainder and remainder[-1] == 0:
        remainder.pop()
    return remainder


def gf16_mul(x: int, y: int, modulus: int) -> int:
    """Shift-and-add product of two GF(16) residues."""
    result = 0
    while y:
        if y & 1:
            result ^= x
        y >>= 1
        x <<= 1
        if x & 0b10000:
            x ^= modulus
    return result


class TestPolyArithmetic:
    def test_parse_and_format(self):
        assert PolyArithmetic.parse("1+D^2+D^5") == 0b100101
        assert PolyArithmetic.parse("0x25") == 0b100101
        assert PolyArithmetic.parse("x^3 + x + 1") == 0b1011
        assert PolyArithmetic.format(0b100101) == "1+D^2+D^5"
        assert PolyArithmetic.format(0b110, "S") == "S+S^2"
        assert PolyArithmetic.format(0) == "0"

    def test_parse_rejects_bad_term(self):
        with pytest.raises(InvalidArgumentError, match="D\\^q"):
            PolyArithmetic.parse("1+D^q")

    def test_mul_and_divmod(self):
        assert PolyArithmetic.mul(0b11, 0b11) == 0b101
        assert PolyArithmetic.divmod(0b101, 0b11) == (0b11, 0)
        q, r = PolyArithmetic.divmod(0b100101, 0b111)
        assert PolyArithmetic.mul(q, 0b111) ^ r == 0b100101
        assert PolyArithmetic.degree(r) is None or PolyArithmetic.degree(r) < 2

    def test_zero_modulus(self):
        with pytest.raises(InvalidArgumentError):
            PolyArithmetic.divmod(0b101, 0)

    def test_d26_modulo_squared_quintic(self):
        modulus = (QUINTIC * QUINTIC).bits
        assert PolyArithmetic.pow_mod(0b10, 26, modulus) == 0b101

    def test_gcd_and_inverse(self):
        rng = random.Random(7)
        for _ in range(50):
            a = rng.randrange(1, 1 << 5)
            inv = PolyArithmetic.inverse_mod(a, QUINTIC.bits)
            assert inv is not None
            assert PolyArithmetic.mul_mod(a, inv, QUINTIC.bits) == 1
        # D + 1 divides (D + 1)^2
        assert PolyArithmetic.inverse_mod(0b11, 0b101) is None
        assert PolyArithmetic.gcd(0b101, 0b11) == 0b11


class TestBitPoly:
    def test_reciprocal(self):
        assert QUINTIC.reciprocal() == BitPoly.parse("1+D+D^2+D^4+D^5")
        assert BitPoly.parse("D+D^3").reciprocal() == BitPoly.parse("1+D^2")

    def test_operators(self):
        p = BitPoly.parse("1+D")
        assert p * p == BitPoly.parse("1+D^2")
        assert p**3 == BitPoly.parse("1+D+D^2+D^3")
        assert p + p == BitPoly.of(0)
        assert BitPoly.parse("1+D^2") // p == p
        assert BitPoly.parse("1+D^2") % p == BitPoly.of(0)

    def test_degree_and_coeffs(self):
        assert BitPoly.of(0).degree is None
        assert QUINTIC.degree == 5
        assert QUINTIC.coeffs == [1, 1, 0, 1, 1, 1]
        assert BitPoly.from_coeffs([1, 0, 1]) == BitPoly.parse("1+D^2")

    def test_negative_bits_rejected(self):
        with pytest.raises(ValueError):
            BitPoly(bits=-1)


class TestFieldArithmetic:
    @pytest.mark.parametrize(
        "a, b, m, expected",
        [
            ("1+D", "1+D", "D^3", "1+D^2"),
            ("1+D+D^4", "1", "1+D+D^3", "1+D^2"),
            ("D^5", "D^5", "1+D^2+D^4+D^8+D^10", "1+D^2+D^4+D^8"),
        ],
    )
    def test_poly_mul_mod(self, a, b, m, expected):
        result = FieldArithmetic.poly_mul_mod(BitPoly.parse(a), BitPoly.parse(b), BitPoly.parse(m))
        assert result == BitPoly.parse(expected)

    def test_poly_mul_mod_matches_schoolbook(self):
        rng = random.Random(3)
        for _ in range(200):
            m = BitPoly(bits=rng.randrange(2, 1 << 14))
            a, b = BitPoly(bits=rng.randrange(1 << 16)), BitPoly(bits=rng.randrange(1 << 16))
            expected = schoolbook_mul_mod(a.coeffs or [0], b.coeffs or [0], m.coeffs)
            assert FieldArithmetic.poly_mul_mod(a, b, m).coeffs == expected

    @pytest.mark.parametrize(
        "a, e, m, expected",
        [
            ("D", 26, "1+D^2+D^6+D^8+D^10", "1+D^2"),
            ("D", 7, "1+D+D^2+D^4+D^5", "1+D^2"),
            ("1+D+D^3", 0, "1+D^2+D^5", "1"),
        ],
    )
    def test_poly_pow_mod(self, a, e, m, expected):
        result = FieldArithmetic.poly_pow_mod(BitPoly.parse(a), e, BitPoly.parse(m))
        assert result == BitPoly.parse(expected)

    def test_modular_arguments_rejected(self):
        d = BitPoly.parse("D")
        with pytest.raises(InvalidArgumentError):
            FieldArithmetic.poly_mul_mod(d, d, BitPoly.of(0))
        with pytest.raises(InvalidArgumentError):
            FieldArithmetic.poly_pow_mod(d, 3, BitPoly.of(0))
        with pytest.raises(InvalidArgumentError):
            FieldArithmetic.poly_pow_mod(d, -1, QUINTIC)

    @pytest.mark.parametrize("m", range(2, 13))
    def test_order_of_d_decides_primitivity(self, m):
        d = BitPoly.parse("D")
        one = BitPoly.of(1)
        for p in polys_of_degree(m):
            if not FieldArithmetic.is_irreducible(p):
                continue
            assert FieldArithmetic.poly_pow_mod(d, (1 << m) - 1, p) == one
            # multiplicative order of D by walking its powers
            x, order = 0b10, 1
            while x != 1:
                x <<= 1
                if x >> m:
                    x ^= p.bits
                order += 1
            assert FieldArithmetic.is_primitive(p) == (order == (1 << m) - 1)
            if m in (2, 3, 5, 7):
                assert FieldArithmetic.is_primitive(p)

    def test_primitive_examples(self):
        assert FieldArithmetic.is_primitive(BitPoly.parse("1+D+D^3"))
        assert FieldArithmetic.is_primitive(BitPoly.parse("1+D^3+D^4"))
        assert FieldArithmetic.is_primitive(QUINTIC)

    def test_irreducible_but_not_primitive(self):
        p = BitPoly.parse("1+D+D^2+D^3+D^4")
        assert FieldArithmetic.is_irreducible(p)
        assert not FieldArithmetic.is_primitive(p)

    def test_reducible(self):
        assert not FieldArithmetic.is_irreducible(BitPoly.parse("1+D^2+D^4"))
        assert not FieldArithmetic.is_irreducible(BitPoly.parse("D+D^3"))

    def test_constant_rejected(self):
        with pytest.raises(InvalidArgumentError):
            FieldArithmetic.is_irreducible(BitPoly.of(1))

    @pytest.mark.parametrize("m, count", [(2, 1), (3, 2), (4, 3), (5, 6), (6, 9), (7, 18), (8, 30)])
    def test_irreducible_counts(self, m, count):
        assert sum(FieldArithmetic.is_irreducible(p) for p in polys_of_degree(m)) == count

    @pytest.mark.parametrize("m", [2, 3, 5, 7])
    def test_mersenne_degrees_irreducible_means_primitive(self, m):
        for p in polys_of_degree(m):
            assert FieldArithmetic.is_irreducible(p) == FieldArithmetic.is_primitive(p)

    def test_cyclotomic_coset(self):
        assert sorted(FieldArithmetic.cyclotomic_coset(3, 5)) == [3, 6, 12, 17, 24]
        assert FieldArithmetic.cyclotomic_coset(0, 4) == [0]
        assert sorted(FieldArithmetic.cyclotomic_coset(5, 4)) == [5, 10]

    def test_minimal_polynomial_of_alpha_cubed(self):
        ctx = FieldContext(modulus=QUINTIC)
        assert FieldArithmetic.minimal_polynomial_of_power(ctx, 3) == BitPoly.parse("1+D^2+D^5")
        assert FieldArithmetic.minimal_polynomial_of_power(ctx, 1) == QUINTIC

    def test_minimal_polynomial_matches_field_expansion(self):
        modulus = BitPoly.parse("1+D+D^4")
        powers = [1]
        for _ in range(14):
            powers.append(gf16_mul(powers[-1], 0b10, modulus.bits))
        # (D + a^3)(D + a^6)(D + a^12)(D + a^9) with GF(16) coefficients, index = degree
        product = [1]
        for c in (3, 6, 12, 9):
            shifted = [0, *product]
            for k, coeff in enumerate(product):
                shifted[k] ^= gf16_mul(powers[c], coeff, modulus.bits)
            product = shifted
        assert set(product) <= {0, 1}
        expected = BitPoly.from_coeffs(product)
        ctx = FieldContext(modulus=modulus)
        assert FieldArithmetic.minimal_polynomial_of_power(ctx, 3) == expected
        assert expected == BitPoly.parse("1+D+D^2+D^3+D^4")

    def test_partial_coset_product_fails(self, monkeypatch):
        # a product over an incomplete coset keeps coefficients outside GF(2)
        monkeypatch.setattr(FieldArithmetic, "cyclotomic_coset", staticmethod(lambda e, m: [e]))
        ctx = FieldContext(modulus=QUINTIC)
        with pytest.raises(SynthesisError, match="left GF\\(2\\)") as excinfo:
            FieldArithmetic.minimal_polynomial_of_power(ctx, 3)
        assert isinstance(excinfo.value, WorkbenchError)

    def test_minimal_polynomials_divide_field_polynomial(self):
        ctx = FieldContext(modulus=QUINTIC)
        field_poly = (1 << 31) | 1
        for e in range(1, 31):
            p = FieldArithmetic.minimal_polynomial_of_power(ctx, e)
            assert PolyArithmetic.mod(field_poly, p.bits) == 0
            assert p.degree == len(FieldArithmetic.cyclotomic_coset(e, 5))

    def test_minimal_polynomial_range(self):
        ctx = FieldContext(modulus=QUINTIC)
        with pytest.raises(InvalidArgumentError):
            FieldArithmetic.minimal_polynomial_of_power(ctx, 0)
        with pytest.raises(InvalidArgumentError):
            FieldArithmetic.minimal_polynomial_of_power(ctx, 32)


class TestFieldModels:
    def test_context_requires_primitive(self):
        with pytest.raises(ValueError):
            FieldContext(modulus=BitPoly.parse("1+D+D^2+D^3+D^4"))

    def test_context_properties(self):
        ctx = FieldContext(modulus=QUINTIC)
        assert ctx.m == 5
        assert ctx.group_order == 31

    def test_alpha_generates_group(self):
        ctx = FieldContext(modulus=QUINTIC)
        powers = {FieldElement.alpha_power(ctx, e).residue.bits for e in range(31)}
        assert len(powers) == 31
        assert FieldElement.alpha_power(ctx, 31) == FieldElement.alpha_power(ctx, 0)

    def test_element_arithmetic(self):
        ctx = FieldContext(modulus=QUINTIC)
        a = FieldElement.alpha_power(ctx, 7)
        b = FieldElement.alpha_power(ctx, 30)
        assert a * b == FieldElement.alpha_power(ctx, 6)
        assert a**5 == FieldElement.alpha_power(ctx, 4)
        assert (a + a).is_zero()


class TestPrimeFactorTable:
    @pytest.mark.parametrize("m", range(1, 65))
    def test_factors_exhaust_mersenne_number(self, m):
        n = (1 << m) - 1
        for prime in PrimeFactorTable.prime_factors(m):
            assert n % prime == 0
            while n % prime == 0:
                n //= prime
        assert n == 1

    def test_outside_table(self):
        with pytest.raises(InvalidArgumentError):
            PrimeFactorTable.prime_factors(65)


class TestLinearSolver:
    def test_solve(self):
        # columns of [[1,1],[0,1]] as bit vectors: col0 = row0 only, col1 = rows 0 and 1
        columns = [0b01, 0b11]
        assert LinearSolver.solve(columns, 0b10) == 0b11
        assert LinearSolver.solve(columns, 0b00) == 0

    def test_inconsistent(self):
        assert LinearSolver.solve([0b01, 0b01], 0b10) is None

    def test_random_consistency(self):
        rng = random.Random(11)
        for _ in range(100):
            columns = [rng.randrange(1 << 8) for _ in range(8)]
            x = rng.randrange(1 << 8)
            target = 0
            for j, c in enumerate(columns):
                if (x >> j) & 1:
                    target ^= c
            solution = LinearSolver.solve(columns, target)
            assert solution is not None
            check = 0
            for j, c in enumerate(columns):
                if (solution >> j) & 1:
                    check ^= c
            assert check == target
