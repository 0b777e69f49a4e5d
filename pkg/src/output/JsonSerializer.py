import json
import logging
from pathlib import Path
from typing import Any

from src.attack.models.AttackReport import AttackReport
from src.gf2.models.BitPoly import BitPoly
from src.modeler.models.SgModel import SgModel
from src.phaseshift.models.PhaseReport import PhaseReport
from src.shrinker.models.SgPrediction import SgPrediction

logger = logging.getLogger(__name__)


class JsonSerializer:
    """Serialization of workbench reports to deterministic JSON."""

    @staticmethod
    def prediction_data(prediction: SgPrediction) -> dict[str, Any]:
        return {
            "T": prediction.period,
            "ones": prediction.ones,
            "lc_lower": prediction.lc_lower,
            "lc_upper": prediction.lc_upper,
            "P": str(prediction.charpoly_base),
            "N_range": list(prediction.exponent_range),
        }

    @staticmethod
    def model_data(model: SgModel) -> dict[str, Any]:
        return {
            "P": str(model.charpoly_base),
            "rules_a": model.rules_a.text(),
            "rules_b": model.rules_b.text(),
            "length": model.length,
            "charpoly_check": model.charpoly_check,
        }

    @staticmethod
    def attack_data(report: AttackReport) -> dict[str, Any]:
        return {
            "ca_used": report.ca_used,
            "orientation": report.orientation,
            "state": report.state,
            "bits_required": report.bits_required,
            "bm_equivalent": report.bm_equivalent,
            "linear_complexity": report.linear_complexity,
            "degenerate": report.degenerate,
            "keystream": report.keystream,
            "P": report.charpoly_base,
            "notes": list(report.notes),
        }

    @staticmethod
    def phase_data(report: PhaseReport) -> dict[str, Any]:
        return {
            "charpoly": str(report.charpoly),
            "classes": [
                {
                    "reference": cls.reference,
                    "members": [{"cell": m.cell, "shift": m.shift} for m in cls.members],
                }
                for cls in report.classes
            ],
            "unmatched": report.unmatched,
        }

    @staticmethod
    def bm_data(lc: int, connection: BitPoly) -> dict[str, Any]:
        return {"lc": lc, "connection": str(connection)}

    @staticmethod
    def dumps(data: dict[str, Any]) -> str:
        return json.dumps(data, indent=2, sort_keys=True)

    @staticmethod
    def write_json(path: Path, data: dict[str, Any]) -> str:
        """Write one report and return the path written."""
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(JsonSerializer.dumps(data))
            f.write("\n")
        logger.debug(f"Wrote {path}")
        return str(path)
