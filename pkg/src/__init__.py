"""Shrinking-generator workbench - model shrinking generators by linear 90/150 cellular automata."""

from src.attack.KeystreamAttack import KeystreamAttack
from src.modeler.SgModeler import SgModeler
from src.phaseshift.PhaseAnalyzer import PhaseAnalyzer
from src.shrinker.Shrinker import Shrinker
from src.Version import Version

__version__ = Version.VERSION
__all__ = ["KeystreamAttack", "PhaseAnalyzer", "SgModeler", "Shrinker", "Version"]
