import itertools
import random

import pytest

from src.gf2.FieldArithmetic import FieldArithmetic
from src.gf2.models.BitPoly import BitPoly
from src.sequences.LfsrSimulator import LfsrSimulator
from src.sequences.models.BitSeq import BitSeq
from src.sequences.models.Lfsr import Lfsr
from src.sequences.SequenceAnalyzer import SequenceAnalyzer
from src.WorkbenchErrors import InsufficientDataError, InvalidArgumentError


def run(feedback: str, state: list[int], n: int) -> BitSeq:
    return LfsrSimulator.generate(Lfsr(feedback=BitPoly.parse(feedback), state=state), n)


def primitive_polys(m: int) -> list[BitPoly]:
    candidates = [BitPoly(bits=(1 << m) | (mid << 1) | 1) for mid in range(1 << (m - 1))]
    return [p for p in candidates if FieldArithmetic.is_primitive(p)]


def reproduced_by_length(bits: list[int], length: int) -> bool:
    """Whether some register of ``length`` stages outputs ``bits``, by trying every tap set."""
    for taps in itertools.product([0, 1], repeat=length):
        if all(
            bits[t] == sum(c * bits[t - 1 - i] for i, c in enumerate(taps)) % 2
            for t in range(length, len(bits))
        ):
            return True
    return False


class TestBitSeq:
    def test_parse(self):
        assert BitSeq.parse("0,1, 1").bits == (0, 1, 1)
        assert str(BitSeq.parse("0101")) == "0101"
        with pytest.raises(ValueError):
            BitSeq.parse("01a1")

    def test_slice_and_weight(self):
        s = BitSeq.parse("0011101")
        assert s.slice(2, 5) == BitSeq.parse("111")
        assert s.weight() == 4
        assert len(s) == 7
        assert s[3] == 1


class TestLfsr:
    def test_small_register_output(self):
        assert str(run("1+D+D^3", [1, 0, 0], 7)) == "0011101"

    def test_four_stage_register_output(self):
        assert str(run("1+D^3+D^4", [1, 0, 0, 0], 15)) == "000100110101111"

    def test_state_advances(self):
        lfsr = Lfsr(feedback=BitPoly.parse("1+D+D^3"), state=[1, 0, 0])
        first = LfsrSimulator.generate(lfsr, 4)
        rest = LfsrSimulator.generate(lfsr, 3)
        assert str(first) + str(rest) == "0011101"

    def test_taps(self):
        lfsr = Lfsr(feedback=BitPoly.parse("1+D^3+D^4"), state=[1, 0, 0, 0])
        assert LfsrSimulator.taps(lfsr) == [2, 3]

    def test_characteristic_polynomial(self):
        lfsr = Lfsr(feedback=BitPoly.parse("1+D^3+D^4"), state=[1, 0, 0, 0])
        assert lfsr.characteristic_polynomial == BitPoly.parse("1+D+D^4")

    def test_invalid_registers(self):
        with pytest.raises(ValueError):
            Lfsr(feedback=BitPoly.parse("D+D^3"), state=[1, 0, 0])
        with pytest.raises(ValueError):
            Lfsr(feedback=BitPoly.parse("1+D^4"), state=[1, 0, 0])
        with pytest.raises(ValueError):
            Lfsr(feedback=BitPoly.parse("1+D"), state=[2])

    def test_negative_count(self):
        lfsr = Lfsr(feedback=BitPoly.parse("1+D"), state=[1])
        with pytest.raises(InvalidArgumentError):
            LfsrSimulator.generate(lfsr, -1)

    def test_from_output_prefix(self):
        prefix = run("1+D^3+D^4", [1, 0, 0, 0], 4)
        lfsr = LfsrSimulator.from_output_prefix(BitPoly.parse("1+D^3+D^4"), prefix)
        assert str(LfsrSimulator.generate(lfsr, 15)) == "000100110101111"

    @pytest.mark.parametrize("m", [3, 4, 5, 6, 7, 8])
    def test_m_sequences(self, m):
        rng = random.Random(m)
        for p in primitive_polys(m)[:4]:
            state = [0] * m
            state[rng.randrange(m)] = 1
            s = run(str(p), state, 2 * ((1 << m) - 1))
            assert SequenceAnalyzer.seq_period(s) == (1 << m) - 1
            assert s.slice(0, (1 << m) - 1).weight() == 1 << (m - 1)
            assert SequenceAnalyzer.linear_complexity(s) == m


class TestSequenceAnalyzer:
    def test_period_of_small_register(self):
        assert SequenceAnalyzer.seq_period(run("1+D+D^3", [1, 0, 0], 14)) == 7

    def test_period_undetermined(self):
        assert SequenceAnalyzer.seq_period(BitSeq.parse("0001")) is None

    def test_period_of_empty(self):
        with pytest.raises(InvalidArgumentError):
            SequenceAnalyzer.seq_period(BitSeq.parse(""))

    def test_bm_trivial(self):
        lc, conn = SequenceAnalyzer.berlekamp_massey(BitSeq.parse("0000"))
        assert lc == 0
        assert conn == BitPoly.of(1)

    def test_bm_impulse(self):
        assert SequenceAnalyzer.linear_complexity(BitSeq.parse("00001")) == 5

    def test_bm_recovers_feedback(self):
        lc, conn = SequenceAnalyzer.berlekamp_massey(run("1+D^3+D^4", [1, 0, 0, 0], 8))
        assert lc == 4
        assert conn == BitPoly.parse("1+D^3+D^4")

    def test_bm_round_trip(self):
        rng = random.Random(2024)
        for _ in range(500):
            length = rng.randint(1, 16)
            feedback = BitPoly(bits=(1 << length) | (rng.randrange(1 << length) & ~1) | 1)
            state = [rng.randint(0, 1) for _ in range(length)]
            if not any(state):
                state[0] = 1
            s = run(str(feedback), state, 4 * length)
            lc, conn = SequenceAnalyzer.berlekamp_massey(s)
            assert lc <= length
            rebuilt = LfsrSimulator.from_output_prefix(conn, s, lc)
            assert LfsrSimulator.generate(rebuilt, len(s)) == s

    def test_bm_complexity_is_minimal(self):
        rng = random.Random(6)
        checked = 0
        for _ in range(300):
            if rng.random() < 0.5:
                bits = [rng.randint(0, 1) for _ in range(14)]
            else:
                length = rng.randint(1, 6)
                feedback = BitPoly(bits=(1 << length) | rng.randrange(1 << length) | 1)
                state = [rng.randint(0, 1) for _ in range(length)]
                bits = list(run(str(feedback), state, 14).bits)
            lc = SequenceAnalyzer.linear_complexity(BitSeq.of(bits))
            if lc > 6:
                continue
            checked += 1
            assert reproduced_by_length(bits, lc)
            if lc > 0:
                assert not reproduced_by_length(bits, lc - 1)
        assert checked > 100

    def test_minimal_polynomial_is_characteristic_convention(self):
        s = run("1+D^3+D^4", [1, 0, 0, 0], 8)
        assert SequenceAnalyzer.minimal_polynomial_of_seq(s) == BitPoly.parse("1+D+D^4")

    def test_minimal_polynomial_needs_data(self):
        with pytest.raises(InsufficientDataError):
            SequenceAnalyzer.minimal_polynomial_of_seq(BitSeq.parse("0001"))
