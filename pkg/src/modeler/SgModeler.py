import logging

from pydantic import ValidationError

from src.automaton.models.RuleVector import RuleVector
from src.gf2.FieldArithmetic import FieldArithmetic
from src.gf2.models.BitPoly import BitPoly
from src.gf2.models.FieldContext import FieldContext
from src.modeler.CaSynthesizer import CaSynthesizer
from src.modeler.models.SgModel import SgModel
from src.models.WorkbenchConfig import WorkbenchConfig
from src.WorkbenchErrors import DegenerateCosetError, InvalidArgumentError, SynthesisError

logger = logging.getLogger(__name__)


class SgModeler:
    """From (L1, P2) to the linear hybrid CA reproducing the shrunken sequence."""

    @staticmethod
    def field_context(p2: BitPoly) -> FieldContext:
        try:
            return FieldContext(modulus=p2)
        except ValidationError as e:
            raise InvalidArgumentError(f"P2 = {p2} is not a primitive polynomial") from e

    @staticmethod
    def coset_polynomial(p2: BitPoly, l1: int, config: WorkbenchConfig | None = None) -> BitPoly:
        """Characteristic polynomial of the cyclotomic coset of E = 2^L1 - 1 over GF(2^L2)."""
        if config is None:
            config = WorkbenchConfig()
        if l1 < 1:
            raise InvalidArgumentError(f"L1 must be at least 1, got {l1}")
        if p2.degree is not None and p2.degree > config.max_field_degree:
            raise InvalidArgumentError(
                f"degree of P2 = {p2.degree} exceeds the field degree cap {config.max_field_degree}"
            )
        ctx = SgModeler.field_context(p2)
        group = ctx.group_order
        e = ((1 << l1) - 1) % group or group
        coset = FieldArithmetic.cyclotomic_coset(e, ctx.m)
        if len(coset) < ctx.m:
            raise DegenerateCosetError(
                f"coset of 2^{l1} - 1 modulo 2^{ctx.m} - 1 has size {len(coset)} < L2 = {ctx.m}"
            )
        p = FieldArithmetic.minimal_polynomial_of_power(ctx, e)
        if not FieldArithmetic.is_primitive(p):
            logger.warning(f"P(D) = {p} is irreducible of degree {ctx.m} but not primitive")
        logger.info(f"P(D) = {p} (coset {min(coset)}, L1 = {l1}, P2 = {p2})")
        return p

    @staticmethod
    def expand_once(rv: RuleVector) -> RuleVector:
        """Complement the last rule, then append the mirror image."""
        diagonal = list(rv.diagonal)
        diagonal[-1] ^= 1
        return RuleVector.from_diagonal(diagonal + diagonal[::-1])

    @staticmethod
    def model_sg(
        l1: int, p2: BitPoly, config: WorkbenchConfig | None = None
    ) -> tuple[RuleVector, RuleVector]:
        model = SgModeler.build_model(l1, p2, config)
        return model.rules_a, model.rules_b

    @staticmethod
    def build_model(l1: int, p2: BitPoly, config: WorkbenchConfig | None = None) -> SgModel:
        """Steps 1-3: P(D), synthesis, and L1 - 1 rounds of expansion for both CA."""
        if config is None:
            config = WorkbenchConfig()

        p = SgModeler.coset_polynomial(p2, l1, config)
        degree = p.degree
        assert degree is not None
        length = degree << (l1 - 1)
        if length > config.max_degree:
            raise InvalidArgumentError(
                f"CA length {length} exceeds the configured cap {config.max_degree}"
            )

        rules_a, rules_b = CaSynthesizer.synthesize_ca(p)
        for _ in range(l1 - 1):
            rules_a = SgModeler.expand_once(rules_a)
            rules_b = SgModeler.expand_once(rules_b)

        check = False
        if config.verify_charpoly:
            expected = p ** (1 << (l1 - 1))
            for rv in (rules_a, rules_b):
                if CaSynthesizer.ca_charpoly(rv) != expected:
                    raise SynthesisError(f"expanded CA {rv} does not have charpoly {expected}")
            check = True

        logger.info(f"Modeled SG (L1={l1}, P2={p2}) by two CA of length {length}")
        return SgModel(
            l1=l1,
            p2=p2,
            charpoly_base=p,
            rules_a=rules_a,
            rules_b=rules_b,
            charpoly_check=check,
        )
