import re

from src.WorkbenchErrors import InvalidArgumentError

_MONOMIAL = re.compile(r"^(?:1|D|x|S|(?:D|x|S)\^(\d+))$")


class PolyArithmetic:
    """Carry-less arithmetic on GF(2) polynomials packed into Python ints.

    Bit k of an int is the coefficient of D^k, so addition is XOR and the
    degree is ``bit_length() - 1``. Higher layers wrap these ints in BitPoly.
    """

    @staticmethod
    def degree(a: int) -> int | None:
        """Degree of ``a``; None for the zero polynomial."""
        return a.bit_length() - 1 if a else None

    @staticmethod
    def mul(a: int, b: int) -> int:
        """Schoolbook carry-less product."""
        if a.bit_length() > b.bit_length():
            a, b = b, a
        result = 0
        while a:
            if a & 1:
                result ^= b
            a >>= 1
            b <<= 1
        return result

    @staticmethod
    def square(a: int) -> int:
        """Square by spreading bits: (Σ a_k D^k)^2 = Σ a_k D^{2k}."""
        result = 0
        k = 0
        while a:
            if a & 1:
                result |= 1 << (2 * k)
            a >>= 1
            k += 1
        return result

    @staticmethod
    def divmod(a: int, m: int) -> tuple[int, int]:
        """Quotient and remainder of long division by ``m``."""
        if m == 0:
            raise InvalidArgumentError("division by the zero polynomial")
        dm = m.bit_length()
        quotient = 0
        while a.bit_length() >= dm:
            shift = a.bit_length() - dm
            quotient ^= 1 << shift
            a ^= m << shift
        return quotient, a

    @staticmethod
    def mod(a: int, m: int) -> int:
        return PolyArithmetic.divmod(a, m)[1]

    @staticmethod
    def mul_mod(a: int, b: int, m: int) -> int:
        """(a·b) mod m with interleaved reduction."""
        if m == 0:
            raise InvalidArgumentError("zero modulus")
        dm = m.bit_length() - 1
        if dm == 0:
            return 0
        a = PolyArithmetic.mod(a, m)
        b = PolyArithmetic.mod(b, m)
        top = 1 << dm
        result = 0
        while b:
            if b & 1:
                result ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= m
        return result

    @staticmethod
    def pow_mod(a: int, e: int, m: int) -> int:
        """a^e mod m by left-to-right square-and-multiply."""
        if m == 0:
            raise InvalidArgumentError("zero modulus")
        if e < 0:
            raise InvalidArgumentError(f"negative exponent {e}")
        result = PolyArithmetic.mod(1, m)
        base = PolyArithmetic.mod(a, m)
        for bit in bin(e)[2:]:
            result = PolyArithmetic.mod(PolyArithmetic.square(result), m)
            if bit == "1":
                result = PolyArithmetic.mul_mod(result, base, m)
        return result

    @staticmethod
    def gcd(a: int, b: int) -> int:
        while b:
            a, b = b, PolyArithmetic.mod(a, b)
        return a

    @staticmethod
    def inverse_mod(a: int, m: int) -> int | None:
        """Inverse of ``a`` modulo ``m`` by extended Euclid; None if not a unit."""
        r0, r1 = m, PolyArithmetic.mod(a, m)
        s0, s1 = 0, 1
        while r1:
            q, r = PolyArithmetic.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 ^ PolyArithmetic.mul(q, s1)
        if r0 != 1:
            return None
        return PolyArithmetic.mod(s0, m)

    @staticmethod
    def reverse(a: int, length: int) -> int:
        """D^length · a(1/D): reverse the coefficient window [0, length]."""
        result = 0
        for k in range(length + 1):
            if (a >> k) & 1:
                result |= 1 << (length - k)
        return result

    @staticmethod
    def derivative(a: int) -> int:
        """Formal derivative: odd-degree terms drop one degree, even ones vanish."""
        odd = a & int("10" * ((a.bit_length() + 1) // 2), 2) if a else 0
        return odd >> 1

    # ------------------------------------------------------------------
    # Text formats
    # ------------------------------------------------------------------

    @staticmethod
    def format(a: int, var: str = "D") -> str:
        """Canonical text: monomials ascending by degree, e.g. ``1+D^2+D^5``."""
        if a == 0:
            return "0"
        terms = []
        for k in range(a.bit_length()):
            if (a >> k) & 1:
                if k == 0:
                    terms.append("1")
                elif k == 1:
                    terms.append(var)
                else:
                    terms.append(f"{var}^{k}")
        return "+".join(terms)

    @staticmethod
    def parse(text: str) -> int:
        """Parse monomial-sum text or a ``0x`` hex literal into packed bits."""
        token = text.strip().replace(" ", "")
        if not token:
            raise InvalidArgumentError(f"malformed polynomial: {text!r}")
        if token.lower().startswith("0x"):
            try:
                return int(token, 16)
            except ValueError as e:
                raise InvalidArgumentError(f"malformed polynomial: {text!r}") from e
        if token == "0":
            return 0
        result = 0
        for term in token.split("+"):
            match = _MONOMIAL.match(term)
            if match is None:
                raise InvalidArgumentError(f"malformed polynomial term {term!r} in {text!r}")
            if term == "1":
                k = 0
            elif match.group(1) is None:
                k = 1
            else:
                k = int(match.group(1))
            # repeated monomials cancel mod 2
            result ^= 1 << k
        return result
