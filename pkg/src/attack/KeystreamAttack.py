import logging
from concurrent.futures import ThreadPoolExecutor

from src.attack.models.AttackReport import AttackReport
from src.attack.StateRecovery import StateRecovery
from src.automaton.models.RuleVector import RuleVector
from src.gf2.models.BitPoly import BitPoly
from src.modeler.SgModeler import SgModeler
from src.models.WorkbenchConfig import WorkbenchConfig
from src.sequences.models.BitSeq import BitSeq
from src.sequences.SequenceAnalyzer import SequenceAnalyzer
from src.WorkbenchErrors import (
    InvalidArgumentError,
    ModelMismatchError,
    VerificationMismatchError,
    WindowTooShortError,
)

logger = logging.getLogger(__name__)

LCT_NOTE = (
    "Linear consistency test: divide-and-conquer over all 2^L2 initial states of R2 "
    "against the CA model; documented only, not run."
)


class KeystreamAttack:
    """Reconstruct a shrunken keystream from n = L2·2^(L1-1) intercepted bits."""

    @staticmethod
    def candidates(rules_a: RuleVector, rules_b: RuleVector) -> list[tuple[str, RuleVector, str]]:
        """(label, rule vector, orientation), rightmost placement first."""
        return [
            ("a", rules_a, "right"),
            ("a", rules_a, "left"),
            ("b", rules_b, "right"),
            ("b", rules_b, "left"),
        ]

    @staticmethod
    def _try_candidate(
        rv: RuleVector, orientation: str, window: BitSeq, horizon: int
    ) -> tuple[str, BitSeq] | None:
        # the leftmost cell of rv is the rightmost cell of its mirror image
        attacked = rv if orientation == "right" else rv.reversed()
        try:
            stream = StateRecovery.recover_keystream(attacked, window, horizon)
        except VerificationMismatchError as e:
            logger.debug(f"candidate {rv} ({orientation}) rejected: {e}")
            return None
        state = StateRecovery.recover_state(attacked, window.slice(0, rv.n))
        cells = "".join(str(c) for c in state.cells)
        return (cells if orientation == "right" else cells[::-1]), stream

    @staticmethod
    def attack_sg(
        l1: int,
        p2: BitPoly,
        window: BitSeq,
        horizon: int | None = None,
        config: WorkbenchConfig | None = None,
    ) -> AttackReport:
        """Model the SG, then try both CA in both orientations until one explains the window."""
        if config is None:
            config = WorkbenchConfig()
        if l1 < 1:
            raise InvalidArgumentError(f"L1 must be at least 1, got {l1}")
        l2 = p2.degree
        if l2 is None or l2 < 1:
            raise InvalidArgumentError(f"P2 = {p2} has no positive degree")
        n = l2 << (l1 - 1)
        if len(window) < n:
            raise WindowTooShortError(f"attack needs n = {n} bits, window has {len(window)}")
        if horizon is None:
            horizon = ((1 << l2) - 1) << (l1 - 1)

        model = SgModeler.build_model(l1, p2, config)
        # enough regenerated bits for BM to settle on the model's complexity
        span = max(horizon, 2 * n)
        candidates = KeystreamAttack.candidates(model.rules_a, model.rules_b)

        if config.jobs > 1:
            with ThreadPoolExecutor(max_workers=config.jobs) as pool:
                outcomes = list(
                    pool.map(
                        lambda c: KeystreamAttack._try_candidate(c[1], c[2], window, span),
                        candidates,
                    )
                )
        else:
            outcomes = []
            for _, rv, orientation in candidates:
                outcome = KeystreamAttack._try_candidate(rv, orientation, window, span)
                outcomes.append(outcome)
                if outcome is not None:
                    break

        for (label, rv, orientation), outcome in zip(candidates, outcomes):
            if outcome is None:
                continue
            state, stream = outcome
            lc = SequenceAnalyzer.linear_complexity(stream.slice(0, 2 * n))
            degenerate = window.weight() == 0
            notes = [LCT_NOTE]
            if degenerate:
                logger.warning("intercepted window is all zeros: recovered the all-zero solution")
                notes.append("degenerate stream: the all-zero solution")
            logger.info(
                f"Recovered state {state} with CA {label} ({orientation}); "
                f"{n} bits used, BM would need {2 * lc}"
            )
            return AttackReport(
                ca_used=rv.text(),
                candidate=label,
                orientation=orientation,
                state=state,
                bits_required=n,
                linear_complexity=lc,
                bm_equivalent=2 * lc,
                degenerate=degenerate,
                keystream=str(stream.slice(0, horizon)),
                charpoly_base=str(model.charpoly_base),
                notes=notes,
            )

        raise ModelMismatchError(
            f"no candidate CA for L1={l1}, P2={p2} reproduces the {len(window)}-bit window"
        )
