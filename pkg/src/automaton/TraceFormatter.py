import pandas as pd

from src.automaton.CellularAutomaton import CellularAutomaton
from src.automaton.models.CaState import CaState
from src.automaton.models.RuleVector import RuleVector


class TraceFormatter:
    """Tabular views of CA runs: one row per time step, one column per cell."""

    @staticmethod
    def trace_frame(rv: RuleVector, s: CaState, steps: int) -> pd.DataFrame:
        rows = CellularAutomaton.run_packed(rv, s, steps)
        frame = pd.DataFrame(
            [[(row >> i) & 1 for i in range(rv.n)] for row in rows],
            columns=[str(i) for i in range(1, rv.n + 1)],
            dtype="int8",
        )
        frame.index.name = "t"
        return frame

    @staticmethod
    def triangle_frame(triangle: list[list[int]]) -> pd.DataFrame:
        """Row t holds cells t+1 .. n; cells left of the diagonal are empty."""
        n = len(triangle)
        frame = pd.DataFrame(
            [[pd.NA] * t + row for t, row in enumerate(triangle)],
            columns=[str(i) for i in range(1, n + 1)],
            dtype="Int8",
        )
        frame.index.name = "t"
        return frame

    @staticmethod
    def render(frame: pd.DataFrame) -> str:
        """Compact text: one line per row, blanks for missing cells."""
        lines = [" ".join(frame.columns)]
        widths = [len(c) for c in frame.columns]
        for _, row in frame.iterrows():
            cells = ["" if pd.isna(v) else str(int(v)) for v in row]
            lines.append(" ".join(c.rjust(w) for c, w in zip(cells, widths)).rstrip())
        return "\n".join(lines)
