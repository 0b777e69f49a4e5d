import argparse
import logging
import sys
from pathlib import Path
from typing import Any

from src.attack.KeystreamAttack import KeystreamAttack
from src.attack.StateRecovery import StateRecovery
from src.automaton.CellularAutomaton import CellularAutomaton
from src.automaton.models.CaState import CaState
from src.automaton.models.RuleVector import RuleVector
from src.automaton.TraceFormatter import TraceFormatter
from src.gf2.models.BitPoly import BitPoly
from src.modeler.SgModeler import SgModeler
from src.models.WorkbenchConfig import WorkbenchConfig
from src.output.JsonSerializer import JsonSerializer
from src.phaseshift.PhaseAnalyzer import PhaseAnalyzer
from src.sequences.LfsrSimulator import LfsrSimulator
from src.sequences.models.BitSeq import BitSeq
from src.sequences.models.Lfsr import Lfsr
from src.sequences.SequenceAnalyzer import SequenceAnalyzer
from src.shrinker.models.ShrinkingGenerator import ShrinkingGenerator
from src.shrinker.Shrinker import Shrinker
from src.Version import Version
from src.WorkbenchErrors import WorkbenchError
from src.WorkedExamples import WorkedExamples


class CommandLineInterface:
    """Command-line interface for the shrinking-generator CA workbench."""

    @staticmethod
    def setup_logging(verbose: bool = False) -> None:
        """Configure logging; diagnostics go to stderr, data to stdout."""
        level = logging.DEBUG if verbose else logging.WARNING
        logging.basicConfig(
            level=level,
            format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
            stream=sys.stderr,
        )

    # argparse type converters: a ValueError here becomes a usage error (exit 2)

    @staticmethod
    def poly_arg(text: str) -> BitPoly:
        try:
            return BitPoly.parse(text)
        except ValueError as e:
            raise argparse.ArgumentTypeError(f"malformed polynomial {text!r}: {e}") from e

    @staticmethod
    def bits_arg(text: str) -> BitSeq:
        try:
            return BitSeq.parse(text)
        except ValueError as e:
            raise argparse.ArgumentTypeError(f"malformed bit string {text!r}") from e

    @staticmethod
    def rules_arg(text: str) -> RuleVector:
        try:
            return RuleVector.parse(text)
        except ValueError as e:
            raise argparse.ArgumentTypeError(f"malformed rule string {text!r}") from e

    @staticmethod
    def state_arg(text: str) -> CaState:
        try:
            return CaState.parse(text)
        except ValueError as e:
            raise argparse.ArgumentTypeError(f"malformed state {text!r}") from e

    @staticmethod
    def count_arg(text: str) -> int:
        try:
            value = int(text)
        except ValueError as e:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from e
        if value < 0:
            raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
        return value

    @staticmethod
    def write_report(args: argparse.Namespace, data: dict[str, Any]) -> None:
        if args.output is not None:
            JsonSerializer.write_json(Path(args.output), data)

    @staticmethod
    def cmd_lfsr(args: argparse.Namespace) -> int:
        lfsr = Lfsr(feedback=args.poly, state=list(args.seed.bits))
        print(LfsrSimulator.generate(lfsr, args.n))
        return 0

    @staticmethod
    def cmd_sg(args: argparse.Namespace) -> int:
        sg = ShrinkingGenerator(
            control=Lfsr(feedback=args.p1, state=list(args.seed1.bits)),
            data=Lfsr(feedback=args.p2, state=list(args.seed2.bits)),
        )
        stream = Shrinker.sg_generate(sg, args.n)
        if not args.predict:
            print(stream)
            return 0
        prediction = Shrinker.sg_predict(sg.l1, sg.l2, sg.data.characteristic_polynomial)
        print(stream)
        print(JsonSerializer.dumps(JsonSerializer.prediction_data(prediction)))
        return 0

    @staticmethod
    def cmd_model(args: argparse.Namespace) -> int:
        model = SgModeler.build_model(args.l1, args.p2, args.config)
        data = JsonSerializer.model_data(model)
        CommandLineInterface.write_report(args, data)
        if args.json:
            print(JsonSerializer.dumps(data))
            return 0
        print(model.rules_a)
        print(model.rules_b)
        print(f"P(D) = {model.charpoly_base}")
        print(f"charpoly check: {'passed' if model.charpoly_check else 'skipped'}")
        return 0

    @staticmethod
    def cmd_ca_run(args: argparse.Namespace) -> int:
        rv, state = args.rules, args.state
        if args.triangle:
            window = CellularAutomaton.cell_trace(rv, state, rv.n, rv.n)
            triangle = StateRecovery.recover_triangle(rv, window)
            print(TraceFormatter.render(TraceFormatter.triangle_frame(triangle)))
            return 0
        steps = 10 if args.n is None else args.n
        if args.cell is not None:
            print(CellularAutomaton.cell_trace(rv, state, args.cell, steps))
        else:
            print(TraceFormatter.render(TraceFormatter.trace_frame(rv, state, steps)))
        return 0

    @staticmethod
    def cmd_attack(args: argparse.Namespace) -> int:
        report = KeystreamAttack.attack_sg(args.l1, args.p2, args.window, args.horizon, args.config)
        data = JsonSerializer.attack_data(report)
        CommandLineInterface.write_report(args, data)
        if args.json:
            print(JsonSerializer.dumps(data))
            return 0
        print(f"CA {report.ca_used} ({report.orientation}), state {report.state}")
        print(f"bits required: {report.bits_required}, BM would need {report.bm_equivalent}")
        print(report.keystream)
        return 0

    @staticmethod
    def cmd_phaseshift(args: argparse.Namespace) -> int:
        report = PhaseAnalyzer.phase_report(args.rules, args.config)
        data = JsonSerializer.phase_data(report)
        CommandLineInterface.write_report(args, data)
        if args.json:
            print(JsonSerializer.dumps(data))
            return 0
        print(f"charpoly: {report.charpoly.format('S')}")
        for cls in report.classes:
            members = ", ".join(f"{m.cell} (+{m.shift})" for m in cls.members)
            print(f"reference {cls.reference}: {members}")
        print(f"unmatched: {', '.join(map(str, report.unmatched)) or 'none'}")
        return 0

    @staticmethod
    def cmd_bm(args: argparse.Namespace) -> int:
        lc, connection = SequenceAnalyzer.berlekamp_massey(args.seq)
        data = JsonSerializer.bm_data(lc, connection)
        CommandLineInterface.write_report(args, data)
        if args.json:
            print(JsonSerializer.dumps(data))
            return 0
        print(f"lc: {lc}")
        print(f"connection: {connection}")
        return 0

    @staticmethod
    def cmd_verify_paper(args: argparse.Namespace) -> int:
        results = WorkedExamples.run()
        for result in results:
            status = "PASS" if result.passed else "FAIL"
            line = f"{status}  {result.name}"
            if not result.passed:
                line += f" (expected {result.expected}, got {result.observed})"
            print(line)
        return 0 if all(r.passed for r in results) else 1

    @staticmethod
    def build_parser() -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="sg-workbench",
            description="Model shrinking generators by linear 90/150 cellular automata",
        )
        parser.add_argument("--version", action="version", version=f"%(prog)s {Version.VERSION}")
        parser.add_argument("-v", "--verbose", action="store_true", help="Verbose output")
        parser.add_argument(
            "--jobs", type=int, default=1, help="Worker threads for the attack (default: 1)"
        )

        subparsers = parser.add_subparsers(dest="command", help="Command to execute")
        poly, bits = CommandLineInterface.poly_arg, CommandLineInterface.bits_arg
        count = CommandLineInterface.count_arg

        lfsr_parser = subparsers.add_parser("lfsr", help="Run one LFSR")
        lfsr_parser.add_argument("--poly", type=poly, required=True, help="Feedback polynomial")
        lfsr_parser.add_argument("--seed", type=bits, required=True, help="Initial stages")
        lfsr_parser.add_argument("-n", type=count, required=True, help="Output bits")
        lfsr_parser.set_defaults(func=CommandLineInterface.cmd_lfsr)

        sg_parser = subparsers.add_parser("sg", help="Run a shrinking generator")
        sg_parser.add_argument("--p1", type=poly, required=True, help="Feedback of R1")
        sg_parser.add_argument("--seed1", type=bits, required=True)
        sg_parser.add_argument("--p2", type=poly, required=True, help="Feedback of R2")
        sg_parser.add_argument("--seed2", type=bits, required=True)
        sg_parser.add_argument("-n", type=count, required=True, help="Shrunken bits")
        sg_parser.add_argument(
            "--predict", action="store_true", help="Also print period, ones and LC bounds"
        )
        sg_parser.set_defaults(func=CommandLineInterface.cmd_sg)

        model_parser = subparsers.add_parser("model", help="Synthesize the SG-equivalent CA")
        model_parser.add_argument("--l1", type=int, required=True, help="Length of R1")
        model_parser.add_argument(
            "--p2", type=poly, required=True, help="Characteristic polynomial of R2"
        )
        model_parser.add_argument("--json", action="store_true")
        model_parser.add_argument("--output", help="Also write the JSON report to this path")
        model_parser.set_defaults(func=CommandLineInterface.cmd_model)

        ca_parser = subparsers.add_parser("ca-run", help="Evolve a 90/150 CA")
        ca_parser.add_argument(
            "--rules", type=CommandLineInterface.rules_arg, required=True, help="0 = 90, 1 = 150"
        )
        ca_parser.add_argument("--state", type=CommandLineInterface.state_arg, required=True)
        ca_parser.add_argument("-n", type=count, help="Steps (default: 10)")
        ca_parser.add_argument("--cell", type=int, help="Print the trace of one cell (1-based)")
        ca_parser.add_argument(
            "--triangle", action="store_true", help="Reconstruction triangle of the last cell"
        )
        ca_parser.set_defaults(func=CommandLineInterface.cmd_ca_run)

        attack_parser = subparsers.add_parser("attack", help="Recover the keystream from a window")
        attack_parser.add_argument("--l1", type=int, required=True)
        attack_parser.add_argument("--p2", type=poly, required=True)
        attack_parser.add_argument("--window", type=bits, required=True, help="Intercepted bits")
        attack_parser.add_argument(
            "--horizon", type=count, help="Bits to emit (default: the SG period)"
        )
        attack_parser.add_argument("--json", action="store_true")
        attack_parser.add_argument("--output", help="Also write the JSON report to this path")
        attack_parser.set_defaults(func=CommandLineInterface.cmd_attack)

        phase_parser = subparsers.add_parser("phaseshift", help="Group cells by phaseshift")
        phase_parser.add_argument("--rules", type=CommandLineInterface.rules_arg, required=True)
        phase_parser.add_argument("--json", action="store_true")
        phase_parser.add_argument("--output", help="Also write the JSON report to this path")
        phase_parser.set_defaults(func=CommandLineInterface.cmd_phaseshift)

        bm_parser = subparsers.add_parser("bm", help="Berlekamp-Massey on a bit string")
        bm_parser.add_argument("--seq", type=bits, required=True)
        bm_parser.add_argument("--json", action="store_true")
        bm_parser.add_argument("--output", help="Also write the JSON report to this path")
        bm_parser.set_defaults(func=CommandLineInterface.cmd_bm)

        verify_parser = subparsers.add_parser("verify-paper", help="Reproduce the worked examples")
        verify_parser.set_defaults(func=CommandLineInterface.cmd_verify_paper)

        return parser

    @staticmethod
    def run(argv: list[str] | None = None) -> int:
        """Parse ``argv`` and dispatch; returns the exit code."""
        parser = CommandLineInterface.build_parser()
        args = parser.parse_args(argv)

        if not args.command:
            parser.print_help()
            return 2
        if args.command == "ca-run" and args.triangle:
            if args.n is not None or args.cell is not None:
                parser.error("ca-run --triangle always spans one step per cell; drop -n and --cell")

        CommandLineInterface.setup_logging(args.verbose)
        try:
            args.config = WorkbenchConfig(jobs=args.jobs)
        except ValueError as e:
            print(f"Error: {e}", file=sys.stderr)
            return 2

        try:
            return int(args.func(args))
        except (WorkbenchError, ValueError) as e:
            print(f"Error: {e}", file=sys.stderr)
            logging.debug("Command failed", exc_info=True)
            return 1

    @staticmethod
    def main() -> None:
        """Main CLI entry point."""
        sys.exit(CommandLineInterface.run())


if __name__ == "__main__":
    CommandLineInterface.main()
