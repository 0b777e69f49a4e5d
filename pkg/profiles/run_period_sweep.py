#!/usr/bin/env python3
"""
Standalone sweep of shrinking generators against their closed-form properties.

For every coprime (L1, L2) pair, every primitive P2 of degree L2 (up to a cap)
and a few random seeds, the shrunken sequence is simulated over two periods and
its period, weight and linear complexity are compared with the predictions.

Usage:
    uv run python profiles/run_period_sweep.py --l1 2 3 4 --l2 3 5 7
    uv run python profiles/run_period_sweep.py --l1 3 --l2 4 5 --output sweep.csv -v
"""
import argparse
import logging
import random
from math import gcd
from pathlib import Path

import pandas as pd

from src.gf2.FieldArithmetic import FieldArithmetic
from src.gf2.models.BitPoly import BitPoly
from src.sequences.models.Lfsr import Lfsr
from src.sequences.SequenceAnalyzer import SequenceAnalyzer
from src.shrinker.models.ShrinkingGenerator import ShrinkingGenerator
from src.shrinker.Shrinker import Shrinker
from src.WorkbenchErrors import DegenerateCosetError

logger = logging.getLogger(__name__)


def primitive_polynomials(degree: int, limit: int) -> list[BitPoly]:
    found = []
    for middle in range(1 << (degree - 1)):
        p = BitPoly(bits=(1 << degree) | (middle << 1) | 1)
        if FieldArithmetic.is_primitive(p):
            found.append(p)
            if len(found) == limit:
                break
    return found


def random_seed(rng: random.Random, length: int) -> list[int]:
    while True:
        seed = [rng.randint(0, 1) for _ in range(length)]
        if any(seed):
            return seed


def sweep(l1_values: list[int], l2_values: list[int], polys: int, seeds: int, rng_seed: int) -> pd.DataFrame:
    rng = random.Random(rng_seed)
    rows = []
    for l1 in l1_values:
        control_poly = primitive_polynomials(l1, 1)[0]
        for l2 in l2_values:
            if l1 < 2 or gcd(l1, l2) != 1:
                logger.info(f"Skipping L1={l1}, L2={l2}")
                continue
            for p2 in primitive_polynomials(l2, polys):
                try:
                    prediction = Shrinker.sg_predict(l1, l2, p2)
                except DegenerateCosetError as e:
                    logger.warning(f"Skipping P2 = {p2}: {e}")
                    continue
                for _ in range(seeds):
                    sg = ShrinkingGenerator(
                        control=Lfsr(feedback=control_poly, state=random_seed(rng, l1)),
                        data=Lfsr(feedback=p2.reciprocal(), state=random_seed(rng, l2)),
                    )
                    stream = Shrinker.sg_generate(sg, 2 * prediction.period)
                    one_period = stream.slice(0, prediction.period)
                    lc, _ = SequenceAnalyzer.berlekamp_massey(stream)
                    exponent = lc // l2 if lc % l2 == 0 else None
                    matches_power = exponent is not None and (
                        SequenceAnalyzer.minimal_polynomial_of_seq(stream)
                        == prediction.charpoly_base ** exponent
                    )
                    rows.append(
                        {
                            "L1": l1,
                            "L2": l2,
                            "P2": str(p2),
                            "P": str(prediction.charpoly_base),
                            "T": prediction.period,
                            "T_measured": SequenceAnalyzer.seq_period(stream),
                            "ones": prediction.ones,
                            "ones_measured": one_period.weight(),
                            "LC": lc,
                            "LC_in_bounds": prediction.lc_lower < lc <= prediction.lc_upper,
                            "N": exponent,
                            "charpoly_is_P^N": matches_power,
                        }
                    )
    return pd.DataFrame(rows)


def main() -> None:
    parser = argparse.ArgumentParser(description="Shrinking generator period / LC sweep")
    parser.add_argument("--l1", type=int, nargs="+", default=[2, 3, 4])
    parser.add_argument("--l2", type=int, nargs="+", default=[3, 5, 7])
    parser.add_argument("--polys", type=int, default=4, help="Primitive P2 per degree (default: 4)")
    parser.add_argument("--seeds", type=int, default=3, help="Seeds per polynomial (default: 3)")
    parser.add_argument("--rng-seed", type=int, default=2024)
    parser.add_argument("--output", help="Optional CSV path")
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args()

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    table = sweep(args.l1, args.l2, args.polys, args.seeds, args.rng_seed)
    if table.empty:
        logger.warning("No admissible (L1, L2) pair in the sweep")
        return
    print(table.to_string(index=False))

    summary = table.groupby(["L1", "L2"]).agg(
        runs=("LC", "size"),
        lc_min=("LC", "min"),
        lc_max=("LC", "max"),
        all_in_bounds=("LC_in_bounds", "all"),
        all_powers=("charpoly_is_P^N", "all"),
    )
    print()
    print(summary.to_string())

    if args.output:
        Path(args.output).parent.mkdir(parents=True, exist_ok=True)
        table.to_csv(args.output, index=False)
        logger.info(f"Wrote {args.output}")


if __name__ == "__main__":
    main()
