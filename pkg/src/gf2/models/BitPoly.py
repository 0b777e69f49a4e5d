from __future__ import annotations

from pydantic import BaseModel, ConfigDict, field_validator

from src.gf2.PolyArithmetic import PolyArithmetic


class BitPoly(BaseModel):
    """Polynomial over GF(2); bit k of ``bits`` is the coefficient of D^k."""

    model_config = ConfigDict(frozen=True)

    bits: int

    @field_validator("bits")
    @classmethod
    def _non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("packed coefficients must be non-negative")
        return value

    @classmethod
    def of(cls, bits: int) -> BitPoly:
        return cls(bits=bits)

    @classmethod
    def parse(cls, text: str) -> BitPoly:
        """Accept ``1+D^2+D^5`` or ``0x25``."""
        return cls(bits=PolyArithmetic.parse(text))

    @classmethod
    def monomial(cls, k: int) -> BitPoly:
        return cls(bits=1 << k)

    @classmethod
    def from_coeffs(cls, coeffs: list[int]) -> BitPoly:
        bits = 0
        for k, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << k
        return cls(bits=bits)

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return PolyArithmetic.degree(self.bits)

    @property
    def coeffs(self) -> list[int]:
        return [(self.bits >> k) & 1 for k in range(self.bits.bit_length())]

    def is_zero(self) -> bool:
        return self.bits == 0

    def coefficient(self, k: int) -> int:
        return (self.bits >> k) & 1

    def reciprocal(self) -> BitPoly:
        """D^deg · p(1/D); the zero polynomial maps to itself."""
        if self.bits == 0:
            return self
        return BitPoly(bits=PolyArithmetic.reverse(self.bits, self.bits.bit_length() - 1))

    def hex(self) -> str:
        return hex(self.bits)

    def format(self, var: str = "D") -> str:
        return PolyArithmetic.format(self.bits, var)

    def __str__(self) -> str:
        return self.format()

    def __add__(self, other: BitPoly) -> BitPoly:
        return BitPoly(bits=self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: BitPoly) -> BitPoly:
        return BitPoly(bits=PolyArithmetic.mul(self.bits, other.bits))

    def __pow__(self, e: int) -> BitPoly:
        result = 1
        base = self.bits
        while e:
            if e & 1:
                result = PolyArithmetic.mul(result, base)
            base = PolyArithmetic.square(base)
            e >>= 1
        return BitPoly(bits=result)

    def __divmod__(self, other: BitPoly) -> tuple[BitPoly, BitPoly]:
        q, r = PolyArithmetic.divmod(self.bits, other.bits)
        return BitPoly(bits=q), BitPoly(bits=r)

    def __mod__(self, other: BitPoly) -> BitPoly:
        return BitPoly(bits=PolyArithmetic.mod(self.bits, other.bits))

    def __floordiv__(self, other: BitPoly) -> BitPoly:
        return BitPoly(bits=PolyArithmetic.divmod(self.bits, other.bits)[0])
